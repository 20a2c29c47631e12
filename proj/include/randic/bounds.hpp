#pragma once

#include <optional>
#include <vector>

namespace randic::bounds {

/// Admissible values of p in the high-degree branch of the Randić lower
/// bound, as selected by (n mod 4, parity of k).
struct PChoice {
  std::vector<int> candidates;  // one value, or two for the "either" rows
  int rule_id = 0;              // table row, 1..7 in reading order
};

enum class Regime { kLow, kHigh };  // k <= n/2, k > n/2

struct BoundProfile {
  int n = 0;
  int k = 0;
  std::optional<double> erdos_diam;  // only for k >= 2
  double kw_mu = 0.0;
  double randic_lb = 0.0;
  std::optional<PChoice> p_used;  // only in the high regime
  double g_val = 0.0;
  Regime regime = Regime::kLow;
};

// Diameter of a connected graph with minimum degree k >= 2 is at most this.
double erdos_diameter_bound(int n, int k);
// Average distance upper bound for minimum degree k.
double kouider_winkler_bound(int n, int k);

PChoice lemma2_p(int n, int k);

/// Lower bound on R(G) over all graphs of order n and minimum degree k.
/// In the high regime with two admissible p values the smaller bound is
/// returned.
double randic_lower_bound(int n, int k);

/// Derivative witness for the low-regime lower bound; nonnegative for
/// 1 <= k <= n/2.
double g_fn(int n, int k);

// Low-regime lower bound minus the additive conjecture requirement after
// substituting the diameter bound. Requires 1 <= k <= n/2.
double f_additive(int n, int k);
// Same for the ratio form.
double f_ratio(int n, int k);

/// High-regime lower bound at a given p. p must be one of (n-2)/2, (n-1)/2,
/// n/2, (n+1)/2, (n+2)/2 and n/2 < k <= n-1.
double q_fn(int n, double p, int k);

/// The five p values the high-regime analysis ranges over.
std::vector<double> admissible_p_values(int n);

// q minus the additive requirement 3n/(k+1) - 1 + sqrt(2) - (n+1)/2.
double q_additive_margin(int n, double p, int k);
// q minus the ratio requirement (3n/(k+1) - 1)(n-3+2sqrt(2))/(2n-2).
double q_ratio_margin(int n, double p, int k);

double conjecture1_additive_rhs(int n);
double conjecture1_ratio_rhs(int n);

/// randic_lower_bound(n, k) - kouider_winkler_bound(n, k). Positive values
/// certify R(G) >= mu(G) for every graph with that order and minimum degree.
double part3_formula_gap(int n, int k);

/// Everything above for one (n, k). Requires n >= 2, 1 <= k <= n-1.
BoundProfile bound_profile(int n, int k);

const char* regime_name(Regime r);

}  // namespace randic::bounds
