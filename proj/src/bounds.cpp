#include "randic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace randic::bounds {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require(bool ok, const char* what, int n, int k) {
  if (!ok) {
    throw std::invalid_argument(std::string(what) + " (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
}

void require_order_degree(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n - 1, "need n >= 2 and 1 <= k <= n-1", n, k);
}

double low_regime_bound(int n, int k) {
  const double nd = n, kd = k;
  return kd * (kd - 1) / (2 * (nd - 1)) + kd * (nd - kd) / std::sqrt(kd * (nd - 1));
}

double q_unchecked(int n, double p, int k) {
  const double nd = n, kd = k;
  return (nd - p) * (nd - p - 1) / (2 * (nd - 1)) + p * (p + kd - nd) / (2 * kd) +
         p * (nd - p) / std::sqrt(kd * (nd - 1));
}

double ratio_requirement(int n, int k) {
  const double nd = n;
  return (3 * nd / (k + 1) - 1) * conjecture1_ratio_rhs(n);
}

}  // namespace

double erdos_diameter_bound(int n, int k) {
  require(n >= 1, "need n >= 1", n, k);
  require(k >= 2, "diameter bound needs minimum degree >= 2", n, k);
  return 3.0 * n / (k + 1) - 1;
}

double kouider_winkler_bound(int n, int k) {
  require(n >= 1 && k >= 1, "need n >= 1 and k >= 1", n, k);
  return static_cast<double>(n) / (k + 1) + 2;
}

PChoice lemma2_p(int n, int k) {
  require_order_degree(n, k);
  const int lo = n / 2;
  const int hi = (n + 1) / 2;
  const bool even_k = k % 2 == 0;
  switch (n % 4) {
    case 0:
      return {{n / 2}, 1};
    case 1:
      return even_k ? PChoice{{lo, hi}, 2} : PChoice{{lo}, 3};
    case 2:
      return even_k ? PChoice{{(n - 2) / 2, (n + 2) / 2}, 4} : PChoice{{n / 2}, 5};
    default:
      return even_k ? PChoice{{lo, hi}, 6} : PChoice{{hi}, 7};
  }
}

double randic_lower_bound(int n, int k) {
  require_order_degree(n, k);
  if (2 * k <= n) return low_regime_bound(n, k);
  double best = std::numeric_limits<double>::infinity();
  for (int p : lemma2_p(n, k).candidates) {
    if (std::abs(2 * p - n) > 2) throw std::logic_error("p-table produced a value far from n/2");
    best = std::min(best, q_unchecked(n, p, k));
  }
  return best;
}

double g_fn(int n, int k) {
  require(n >= 2 && k >= 1, "need n >= 2 and k >= 1", n, k);
  const double nd = n, kd = k;
  return (2 * kd - 1) / (2 * (nd - 1)) + (nd - 3 * kd) / (2 * std::sqrt(kd * (nd - 1)));
}

double f_additive(int n, int k) {
  require(n >= 2 && k >= 1 && 2 * k <= n, "need n >= 2 and 1 <= k <= n/2", n, k);
  return low_regime_bound(n, k) - 3.0 * n / (k + 1) - kSqrt2 + (n + 3) / 2.0;
}

double f_ratio(int n, int k) {
  require(n >= 2 && k >= 1 && 2 * k <= n, "need n >= 2 and 1 <= k <= n/2", n, k);
  return low_regime_bound(n, k) - ratio_requirement(n, k);
}

std::vector<double> admissible_p_values(int n) {
  return {(n - 2) / 2.0, (n - 1) / 2.0, n / 2.0, (n + 1) / 2.0, (n + 2) / 2.0};
}

double q_fn(int n, double p, int k) {
  require(n >= 2 && 2 * k > n && k <= n - 1, "need n/2 < k <= n-1", n, k);
  const double twice = 2 * p;
  if (twice != std::round(twice) || std::abs(twice - n) > 2) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not one of the five values near n/2");
  }
  return q_unchecked(n, p, k);
}

double q_additive_margin(int n, double p, int k) {
  return q_fn(n, p, k) - (3.0 * n / (k + 1) - 1 + conjecture1_additive_rhs(n));
}

double q_ratio_margin(int n, double p, int k) { return q_fn(n, p, k) - ratio_requirement(n, k); }

double conjecture1_additive_rhs(int n) {
  require(n >= 3, "conjecture needs n >= 3", n, 0);
  return kSqrt2 - (n + 1) / 2.0;
}

double conjecture1_ratio_rhs(int n) {
  require(n >= 3, "conjecture needs n >= 3", n, 0);
  return (n - 3 + 2 * kSqrt2) / (2.0 * n - 2);
}

double part3_formula_gap(int n, int k) {
  return randic_lower_bound(n, k) - kouider_winkler_bound(n, k);
}

BoundProfile bound_profile(int n, int k) {
  require_order_degree(n, k);
  BoundProfile b;
  b.n = n;
  b.k = k;
  if (k >= 2) b.erdos_diam = erdos_diameter_bound(n, k);
  b.kw_mu = kouider_winkler_bound(n, k);
  b.randic_lb = randic_lower_bound(n, k);
  b.g_val = g_fn(n, k);
  b.regime = 2 * k <= n ? Regime::kLow : Regime::kHigh;
  if (b.regime == Regime::kHigh) b.p_used = lemma2_p(n, k);
  return b;
}

const char* regime_name(Regime r) { return r == Regime::kLow ? "low" : "high"; }

}  // namespace randic::bounds
