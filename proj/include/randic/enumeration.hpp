#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

/// Largest order the permutation-search canonicalizer accepts.
inline constexpr int kMaxCanonicalOrder = 10;
/// Largest order the built-in exhaustive generator accepts.
inline constexpr int kMaxEnumerationOrder = 8;

/// Lexicographically minimal upper-triangle bit string (graph6 pair order,
/// first pair most significant) over all relabelings that list vertices in
/// ascending order of a refined degree signature. Equal keys iff isomorphic.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.bits * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(k.n));
  }
};

CanonicalKey canonical_key(const Graph& g);

/// The relabeling of g whose adjacency realises canonical_key(g).
Graph canonical_form(const Graph& g);

struct CorpusFilter {
  int n = 1;
  std::optional<int> min_degree_at_least;
  bool connected_only = true;

  bool accepts(const Graph& g) const;
};

/// One canonical representative per isomorphism class of graphs on
/// filter.n <= 8 vertices that pass the filter, in ascending key order.
/// Classes are grown one vertex at a time from the classes on n-1 vertices.
std::vector<Graph> enumerate_graphs(const CorpusFilter& filter);

/// Same as enumerate_graphs, delivered through a callback.
void for_each_graph(const CorpusFilter& filter, const std::function<void(const Graph&)>& visit);

/// Seedable generator used by the samplers. Reports record kRngAlgorithm.
using Rng = std::mt19937_64;
inline constexpr const char* kRngAlgorithm = "mt19937_64";

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSamplerAttempts = 10000;

/// Connected graph with minimum degree >= delta. Each attempt includes every
/// pair independently with probability min(1, (delta+2)/(n-1)) and is
/// rejected unless it meets both constraints.
Graph sample_min_degree(int n, int delta, Rng& rng, int max_attempts = kDefaultSamplerAttempts);
Graph sample_min_degree(int n, int delta, std::uint64_t seed, int max_attempts = kDefaultSamplerAttempts);

}  // namespace randic
