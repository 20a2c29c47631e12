#include "randic/search.hpp"

#include "randic/graph6.hpp"

#include <stdexcept>
#include <string>

namespace randic {

double slack_objective(const Graph& g, ClaimId claim) { return check_claim(g, claim).slack; }

const char* step_event_name(StepEvent e) {
  switch (e) {
    case StepEvent::kStart:
      return "start";
    case StepEvent::kMove:
      return "move";
    case StepEvent::kRestart:
      return "restart";
  }
  return "?";
}

namespace {

struct Move {
  Edge edge;
  double slack;
};

std::optional<Move> best_toggle(const Graph& g, const CorpusFilter& constraints, ClaimId claim,
                                double current_slack) {
  std::optional<Move> best;
  const int n = g.order();
  const int delta = constraints.min_degree_at_least.value_or(0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) && (g.degree(u) <= delta || g.degree(v) <= delta)) continue;
      Graph next = g;
      next.toggle_edge(u, v);
      if (!constraints.accepts(next)) continue;
      const double s = slack_objective(next, claim);
      if (s < current_slack && (!best || s < best->slack)) best = Move{{u, v}, s};
    }
  }
  return best;
}

}  // namespace

SearchState hunt(int n, int delta, ClaimId claim, int budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  const int min_order = claim == ClaimId::kC2 ? 2 : 3;
  if (n < min_order || n > kMaxShortFormOrder) {
    throw std::invalid_argument("claim " + std::string(claim_name(claim)) + " needs " +
                                std::to_string(min_order) + " <= n <= 62, got " + std::to_string(n));
  }
  if (delta < 1 || delta > n - 1) {
    throw std::invalid_argument("infeasible minimum degree " + std::to_string(delta) + " for n = " +
                                std::to_string(n) + " (need 1 <= delta <= n-1)");
  }

  SearchState st;
  st.seed = seed;
  st.claim = claim;
  st.constraints = CorpusFilter{n, delta, true};
  Rng rng(seed);

  auto record = [&](StepEvent event, std::optional<Edge> toggled) {
    if (!st.constraints.accepts(st.current)) {
      throw std::logic_error("search visited a graph outside its constraints");
    }
    if (st.step == 1 || st.slack < st.best_slack) {
      st.best_slack = st.slack;
      st.best = st.current;
    }
    st.trace.push_back({st.step, event, toggled, st.slack, st.best_slack, st.current});
  };

  st.current = sample_min_degree(n, delta, rng);
  st.slack = slack_objective(st.current, claim);
  st.step = 1;
  record(StepEvent::kStart, std::nullopt);

  while (st.step < budget) {
    ++st.step;
    if (auto move = best_toggle(st.current, st.constraints, claim, st.slack)) {
      st.current.toggle_edge(move->edge.first, move->edge.second);
      st.slack = move->slack;
      record(StepEvent::kMove, move->edge);
    } else {
      st.current = sample_min_degree(n, delta, rng);
      st.slack = slack_objective(st.current, claim);
      ++st.restarts;
      record(StepEvent::kRestart, std::nullopt);
    }
  }
  return st;
}

}  // namespace randic
