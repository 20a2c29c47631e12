#pragma once

#include <optional>
#include <string>
#include <vector>

namespace randic {

struct GridCell {
  int n = 0;
  int k = 0;
  std::optional<double> p;
  double value = 0.0;
};

enum class ClaimKind {
  kPositive,     // value > 0
  kNonNegative,  // value >= -tol
};

/// Outcome of one analytic family over its grid.
struct FamilyResult {
  std::string name;
  std::string region;  // human-readable claim region
  ClaimKind kind = ClaimKind::kNonNegative;
  long long cells = 0;        // every evaluated cell
  long long claim_cells = 0;  // cells inside the claimed region
  long long violations = 0;
  long long boundary = 0;  // claim-region cells with |value| <= tol
  std::optional<GridCell> minimum;  // smallest value inside the claim region
  std::vector<GridCell> violation_samples;
  std::vector<GridCell> boundary_samples;
};

struct SurveyResult {
  int n_max = 0;
  double tol = 0.0;
  std::vector<FamilyResult> families;

  long long total_violations() const;
};

inline constexpr int kDefaultSurveyMaxOrder = 2000;
inline constexpr std::size_t kSurveySampleLimit = 20;

/// Evaluates every analytic family for n up to n_max (>= 4).
///
/// Families: g_nonneg, f_additive_pos, f_additive_vs_k5, f_ratio_pos,
/// f_ratio_monotone, q_additive, q_ratio, part3_gap, randic_lb_monotone.
SurveyResult run_survey(int n_max, double tol);

const char* claim_kind_symbol(ClaimKind kind);

}  // namespace randic
