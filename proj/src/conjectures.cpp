#include "randic/conjectures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "randic/bounds.hpp"

namespace randic {

std::string_view claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::kC1Additive:
      return "C1_ADD";
    case ClaimId::kC1Ratio:
      return "C1_RATIO";
    case ClaimId::kC2:
      return "C2";
  }
  return "?";
}

ClaimId parse_claim(std::string_view text) {
  if (text == "C1_ADD") return ClaimId::kC1Additive;
  if (text == "C1_RATIO") return ClaimId::kC1Ratio;
  if (text == "C2") return ClaimId::kC2;
  throw std::invalid_argument("unknown claim '" + std::string(text) + "' (expected C1_ADD, C1_RATIO or C2)");
}

bool is_path(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  if (n < 2 || !is_connected(g)) return false;
  auto seq = g.degree_sequence();
  if (seq[0] != 1 || seq[1] != 1) return false;
  for (int i = 2; i < n; ++i) {
    if (seq[i] != 2) return false;
  }
  return true;
}

namespace {

void require_connected(const Graph& g, int min_order) {
  if (g.order() < min_order) {
    throw std::invalid_argument("claim needs n >= " + std::to_string(min_order) + ", got " +
                                std::to_string(g.order()));
  }
  if (!is_connected(g)) throw DisconnectedGraphError();
}

ConjectureVerdict make_verdict(ClaimId id, double slack, double tol, bool extremal) {
  ConjectureVerdict v;
  v.claim = id;
  v.slack = slack;
  v.tolerance = tol;
  v.holds = slack >= -tol;
  const bool near_zero = std::abs(slack) <= tol;
  v.is_equality = near_zero && extremal;
  v.structural_mismatch = near_zero != extremal;
  return v;
}

}  // namespace

ConjectureVerdict check_c1_additive(const Graph& g, double tol) {
  require_connected(g, 3);
  const int d = diameter(g);
  const double slack = randic_index(g) - d - bounds::conjecture1_additive_rhs(g.order());
  return make_verdict(ClaimId::kC1Additive, slack, tol, is_path(g));
}

ConjectureVerdict check_c1_ratio(const Graph& g, double tol) {
  require_connected(g, 3);
  const int d = diameter(g);
  const double slack = randic_index(g) / d - bounds::conjecture1_ratio_rhs(g.order());
  return make_verdict(ClaimId::kC1Ratio, slack, tol, is_path(g));
}

ConjectureVerdict check_c2(const Graph& g, double tol) {
  require_connected(g, 2);
  const double slack = randic_index(g) - average_distance(g);
  return make_verdict(ClaimId::kC2, slack, tol, g.order() == 2);
}

ConjectureVerdict check_claim(const Graph& g, ClaimId id, double tol) {
  switch (id) {
    case ClaimId::kC1Additive:
      return check_c1_additive(g, tol);
    case ClaimId::kC1Ratio:
      return check_c1_ratio(g, tol);
    case ClaimId::kC2:
      return check_c2(g, tol);
  }
  throw std::logic_error("unhandled claim id");
}

PremiseProfile premises(int n, int delta) {
  PremiseProfile p;
  p.n = n;
  p.delta = delta;
  p.part1 = delta >= 5;
  // delta >= n/5 without leaving the integers.
  p.part2 = 5 * delta >= n && n >= 15;
  p.part3 = p.part2;
  return p;
}

PremiseProfile premises(const Graph& g) { return premises(g.order(), g.min_degree()); }

}  // namespace randic
