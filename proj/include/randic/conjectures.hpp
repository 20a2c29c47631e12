#pragma once

#include <string_view>

#include "randic/graph.hpp"

namespace randic {

enum class ClaimId {
  kC1Additive,  // R - D >= sqrt(2) - (n+1)/2
  kC1Ratio,     // R / D >= (n - 3 + 2 sqrt(2)) / (2n - 2)
  kC2,          // R >= mu
};

std::string_view claim_name(ClaimId id);
/// Accepts C1_ADD, C1_RATIO, C2.
ClaimId parse_claim(std::string_view text);

inline constexpr double kDefaultTolerance = 1e-9;

struct ConjectureVerdict {
  ClaimId claim = ClaimId::kC2;
  bool holds = false;
  double slack = 0.0;  // LHS - RHS
  bool is_equality = false;
  double tolerance = kDefaultTolerance;
  // Numeric equality disagrees with the structural extremal-graph test: a
  // near-zero slack on a non-extremal graph, or an extremal graph whose
  // slack is not near zero.
  bool structural_mismatch = false;
};

struct PremiseProfile {
  int n = 0;
  int delta = 0;
  bool part1 = false;  // delta >= 5
  bool part2 = false;  // delta >= n/5 and n >= 15
  bool part3 = false;  // same premise as part2
};

/// Connected with degree sequence (1, 1, 2, ..., 2), or a single vertex.
bool is_path(const Graph& g);

// The C1 checks require a connected graph with n >= 3; C2 requires n >= 2.
// For C1, is_equality additionally requires is_path(g); for C2 the only
// extremal graph is K_2.
ConjectureVerdict check_c1_additive(const Graph& g, double tol = kDefaultTolerance);
ConjectureVerdict check_c1_ratio(const Graph& g, double tol = kDefaultTolerance);
ConjectureVerdict check_c2(const Graph& g, double tol = kDefaultTolerance);
ConjectureVerdict check_claim(const Graph& g, ClaimId id, double tol = kDefaultTolerance);

PremiseProfile premises(const Graph& g);
PremiseProfile premises(int n, int delta);

}  // namespace randic
