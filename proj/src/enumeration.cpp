#include <algorithm>
#include <map>
#include <string>

#include "randic/enumeration.hpp"

namespace randic {

bool CorpusFilter::accepts(const Graph& g) const {
  if (g.order() != n) return false;
  if (min_degree_at_least && g.min_degree() < *min_degree_at_least) return false;
  if (connected_only && (g.order() == 0 || !is_connected(g))) return false;
  return true;
}

namespace {

void validate(const CorpusFilter& filter) {
  if (filter.n < 1) throw std::invalid_argument("corpus order must be >= 1");
  if (filter.n > kMaxEnumerationOrder) {
    throw std::invalid_argument("built-in enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                                "; generate larger corpora externally (e.g. nauty geng) and ingest graph6");
  }
  if (filter.min_degree_at_least && *filter.min_degree_at_least > filter.n - 1) {
    throw std::invalid_argument("min degree filter must be <= n-1");
  }
}

// All isomorphism classes on n vertices, keyed and ordered by canonical key.
std::map<CanonicalKey, Graph> all_classes(int n) {
  std::map<CanonicalKey, Graph> level;
  Graph single(1);
  level.emplace(canonical_key(single), single);
  for (int order = 2; order <= n; ++order) {
    std::map<CanonicalKey, Graph> next;
    const int old = order - 1;
    for (const auto& [key, base] : level) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << old); ++subset) {
        Graph g(order);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < old; ++u) {
          if ((subset >> u) & 1u) g.add_edge(u, old);
        }
        CanonicalKey k = canonical_key(g);
        if (!next.contains(k)) next.emplace(k, canonical_form(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

void for_each_graph(const CorpusFilter& filter, const std::function<void(const Graph&)>& visit) {
  validate(filter);
  for (const auto& [key, g] : all_classes(filter.n)) {
    if (filter.accepts(g)) visit(g);
  }
}

std::vector<Graph> enumerate_graphs(const CorpusFilter& filter) {
  std::vector<Graph> out;
  for_each_graph(filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph sample_min_degree(int n, int delta, Rng& rng, int max_attempts) {
  if (n < 2 || n > Graph::kMaxOrder || delta < 1 || delta > n - 1) {
    throw std::invalid_argument("sampler needs 2 <= n <= " + std::to_string(Graph::kMaxOrder) + " and 1 <= delta <= n-1 (n = " + std::to_string(n) +
                                ", delta = " + std::to_string(delta) + ")");
  }
  const double density = std::min(1.0, (delta + 2.0) / (n - 1));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (uniform01(rng) < density) g.add_edge(u, v);
      }
    }
    if (g.min_degree() >= delta && is_connected(g)) return g;
  }
  throw SamplerExhausted("no connected graph with n = " + std::to_string(n) + " and min degree >= " +
                         std::to_string(delta) + " after " + std::to_string(max_attempts) + " attempts");
}

Graph sample_min_degree(int n, int delta, std::uint64_t seed, int max_attempts) {
  Rng rng(seed);
  return sample_min_degree(n, delta, rng, max_attempts);
}

}  // namespace randic
