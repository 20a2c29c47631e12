#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace randic {

using Edge = std::pair<int, int>;

/// Raised when a distance-based invariant is requested on a graph with an
/// unreachable vertex pair.
class DisconnectedGraphError : public std::domain_error {
 public:
  DisconnectedGraphError() : std::domain_error("graph is disconnected") {}
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as a dense bit row per vertex, so BFS frontier
/// expansion is word-parallel; for n <= 64 every row is a single word.
/// Degrees are cached alongside the rows.
class Graph {
 public:
  static constexpr int kMaxOrder = 8192;

  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate pairs collapse; out-of-range
  /// endpoints and self-loops throw std::invalid_argument.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
  }
  /// Words per adjacency row.
  int words() const { return words_; }
  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int degree(int v) const { return degree_[v]; }

  /// Smallest vertex degree; 0 for the empty graph.
  int min_degree() const;
  /// Degrees sorted ascending.
  std::vector<int> degree_sequence() const;
  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  std::uint64_t& word(int u, int v) { return rows_[static_cast<std::size_t>(u) * words_ + v / 64]; }

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
};

// Named families used throughout the tests and tools.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);

/// Symmetric n x n matrix of shortest-path lengths.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<int> data_;
};

/// True iff every vertex is reachable from vertex 0. Throws on n == 0.
bool is_connected(const Graph& g);

/// BFS distances from every vertex. Throws DisconnectedGraphError if any pair
/// is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Requires a connected graph with n >= 2.
int diameter(const Graph& g);
/// Sum of d(u, v) over unordered pairs divided by C(n, 2). Requires a
/// connected graph with n >= 2.
double average_distance(const Graph& g);

/// Sum over edges uv of 1/sqrt(d(u) d(v)); 0 for an edgeless graph.
double randic_index(const Graph& g);

struct DistanceSummary {
  int diameter = 0;
  double average_distance = 0.0;
};

/// Diameter and average distance from a single all-pairs pass.
DistanceSummary distance_summary(const Graph& g);

struct InvariantReport {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  std::vector<int> degree_sequence;
  double randic = 0.0;
  std::optional<int> diameter;
  std::optional<double> avg_distance;
  bool is_connected = false;
};

/// Never throws on well-formed graphs. Distance fields are set only for
/// connected graphs with n >= 2; the empty graph reports as disconnected.
InvariantReport invariant_report(const Graph& g);

}  // namespace randic
