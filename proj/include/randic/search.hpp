#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randic/conjectures.hpp"
#include "randic/enumeration.hpp"
#include "randic/graph.hpp"

namespace randic {

/// Signed slack of the claim on g; negative means counterexample.
double slack_objective(const Graph& g, ClaimId claim);

enum class StepEvent { kStart, kMove, kRestart };

const char* step_event_name(StepEvent e);

struct TraceEntry {
  int step = 0;
  StepEvent event = StepEvent::kStart;
  std::optional<Edge> toggled;  // set for moves
  double slack = 0.0;
  double best_slack = 0.0;
  Graph graph;  // state after the step
};

struct SearchState {
  Graph current;
  double slack = 0.0;
  Graph best;
  double best_slack = 0.0;
  int step = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  ClaimId claim = ClaimId::kC2;
  CorpusFilter constraints;
  std::vector<TraceEntry> trace;
};

/// Steepest descent over single-edge toggles that keep the graph connected
/// with minimum degree >= delta. Each step either moves to the toggle with
/// the largest slack decrease (ties go to the smallest (u, v)) or, at a local
/// minimum, restarts from a fresh sample. The start evaluation counts as step
/// 1, so budget = 1 returns the sampled start. Deterministic in seed.
/// n is capped at 62 so the best graph can be emitted as graph6.
SearchState hunt(int n, int delta, ClaimId claim, int budget, std::uint64_t seed);

}  // namespace randic
