#include "randic/survey.hpp"

#include <cmath>
#include <stdexcept>

#include "randic/bounds.hpp"

namespace randic {

namespace b = bounds;

long long SurveyResult::total_violations() const {
  long long total = 0;
  for (const auto& f : families) total += f.violations;
  return total;
}

const char* claim_kind_symbol(ClaimKind kind) { return kind == ClaimKind::kPositive ? "> 0" : ">= 0"; }

namespace {

class FamilyScan {
 public:
  FamilyScan(std::string name, std::string region, ClaimKind kind, double tol) : tol_(tol) {
    r_.name = std::move(name);
    r_.region = std::move(region);
    r_.kind = kind;
  }

  void outside(double /*value*/) { ++r_.cells; }

  void inside(GridCell cell) {
    ++r_.cells;
    ++r_.claim_cells;
    if (!r_.minimum || cell.value < r_.minimum->value) r_.minimum = cell;
    const bool bad = r_.kind == ClaimKind::kPositive ? !(cell.value > 0) : !(cell.value >= -tol_);
    if (bad) {
      ++r_.violations;
      if (r_.violation_samples.size() < kSurveySampleLimit) r_.violation_samples.push_back(cell);
    } else if (std::abs(cell.value) <= tol_) {
      ++r_.boundary;
      if (r_.boundary_samples.size() < kSurveySampleLimit) r_.boundary_samples.push_back(cell);
    }
  }

  FamilyResult result() && { return std::move(r_); }

 private:
  double tol_;
  FamilyResult r_;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

SurveyResult run_survey(int n_max, double tol) {
  if (n_max < 4) throw std::invalid_argument("survey needs n_max >= 4");
  SurveyResult out;
  out.n_max = n_max;
  out.tol = tol;

  FamilyScan g_scan("g_nonneg", "2 <= n, 1 <= k <= n/2", ClaimKind::kNonNegative, tol);
  FamilyScan fa_scan("f_additive_pos", "k >= 5 within 1 <= k <= n/2", ClaimKind::kPositive, tol);
  FamilyScan fa_k5("f_additive_vs_k5", "f(n,k) - f(n,5), 6 <= k <= n/2", ClaimKind::kNonNegative, tol);
  FamilyScan fr_scan("f_ratio_pos", "n >= 15, ceil(n/5) <= k <= n/2", ClaimKind::kPositive, tol);
  FamilyScan fr_mono("f_ratio_monotone", "f(n,k+1) - f(n,k), 1 <= k < n/2", ClaimKind::kNonNegative, tol);
  FamilyScan qa_scan("q_additive", "n >= 4, n/2 < k <= n-1, five p values", ClaimKind::kNonNegative, tol);
  FamilyScan qr_scan("q_ratio", "n >= 4, n/2 < k <= n-1, five p values", ClaimKind::kNonNegative, tol);
  FamilyScan p3_scan("part3_gap", "n >= 15, ceil(n/5) <= k <= n-1", ClaimKind::kPositive, tol);
  FamilyScan lb_mono("randic_lb_monotone", "lb(n,k+1) - lb(n,k), 1 <= k < n/2", ClaimKind::kNonNegative, tol);

  for (int n = 2; n <= n_max; ++n) {
    const int half = n / 2;
    for (int k = 1; k <= half; ++k) {
      g_scan.inside({n, k, std::nullopt, b::g_fn(n, k)});

      const double fa = b::f_additive(n, k);
      if (k >= 5) {
        fa_scan.inside({n, k, std::nullopt, fa});
        if (k > 5) fa_k5.inside({n, k, std::nullopt, fa - b::f_additive(n, 5)});
      } else {
        fa_scan.outside(fa);
      }

      if (n >= 3) {
        const double fr = b::f_ratio(n, k);
        if (n >= 15 && k >= ceil_div(n, 5)) {
          fr_scan.inside({n, k, std::nullopt, fr});
        } else {
          fr_scan.outside(fr);
        }
        if (k < half) fr_mono.inside({n, k, std::nullopt, b::f_ratio(n, k + 1) - fr});
      }

      if (k < half) {
        lb_mono.inside({n, k, std::nullopt, b::randic_lower_bound(n, k + 1) - b::randic_lower_bound(n, k)});
      }
    }

    if (n >= 4) {
      for (int k = half + 1; k <= n - 1; ++k) {
        for (double p : b::admissible_p_values(n)) {
          qa_scan.inside({n, k, p, b::q_additive_margin(n, p, k)});
          qr_scan.inside({n, k, p, b::q_ratio_margin(n, p, k)});
        }
      }
    }

    for (int k = 1; k <= n - 1; ++k) {
      const double gap = b::part3_formula_gap(n, k);
      if (n >= 15 && k >= ceil_div(n, 5)) {
        p3_scan.inside({n, k, std::nullopt, gap});
      } else {
        p3_scan.outside(gap);
      }
    }
  }

  for (FamilyScan* scan : {&g_scan, &fa_scan, &fa_k5, &fr_scan, &fr_mono, &qa_scan, &qr_scan, &p3_scan, &lb_mono}) {
    out.families.push_back(std::move(*scan).result());
  }
  return out;
}

}  // namespace randic
