#include "randic/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace randic {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [0, " + std::to_string(kMaxOrder) + "], got " +
                                std::to_string(n));
  }
  words_ = (n + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  degree_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("vertex out of range in pair (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") for n = " + std::to_string(n_));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq = degree_;
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    auto r = row(u);
    for (int w = u / 64; w < words_; ++w) {
      std::uint64_t bits = r[w];
      // Keep only neighbours above u.
      if (w == u / 64) bits &= ~((std::uint64_t{2} << (u % 64)) - 1);
      for (; bits; bits &= bits - 1) out.emplace_back(u, 64 * w + std::countr_zero(bits));
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (adjacent(u, v)) return;
  word(u, v) |= std::uint64_t{1} << (v % 64);
  word(v, u) |= std::uint64_t{1} << (u % 64);
  ++degree_[u];
  ++degree_[v];
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!adjacent(u, v)) return;
  word(u, v) &= ~(std::uint64_t{1} << (v % 64));
  word(v, u) &= ~(std::uint64_t{1} << (u % 64));
  --degree_[u];
  --degree_[v];
  --m_;
}

void Graph::toggle_edge(int u, int v) {
  if (adjacent(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

template <typename Visit>
void for_each_bit(const Bits& b, Visit&& visit) {
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t bits = b[w]; bits; bits &= bits - 1) visit(static_cast<int>(64 * w) + std::countr_zero(bits));
}

// Level-synchronous BFS; calls visit(vertex, level) for every reached vertex.
template <typename Visit>
void bfs(const Graph& g, int source, Visit&& visit) {
  const int words = g.words();
  Bits visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source / 64] = frontier[source / 64] = std::uint64_t{1} << (source % 64);
  visit(source, 0);
  for (int level = 1; any(frontier); ++level) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier, [&](int v) {
      auto r = g.row(v);
      for (int w = 0; w < words; ++w) next[w] |= r[w];
    });
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
    }
    for_each_bit(next, [&](int v) { visit(v, level); });
    frontier.swap(next);
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  int reached = 0;
  bfs(g, 0, [&](int, int) { ++reached; });
  return reached == g.order();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> data(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    int* row = data.data() + static_cast<std::size_t>(s) * n;
    int reached = 0;
    bfs(g, s, [&](int v, int level) {
      row[v] = level;
      ++reached;
    });
    if (reached != n) throw DisconnectedGraphError();
  }
  return DistanceMatrix(n, std::move(data));
}

DistanceSummary distance_summary(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("distance invariants need at least 2 vertices");
  DistanceMatrix d = all_pairs_distances(g);
  DistanceSummary out;
  long long total = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      total += d(u, v);
      out.diameter = std::max(out.diameter, d(u, v));
    }
  }
  out.average_distance = static_cast<double>(total) / (static_cast<double>(n) * (n - 1) / 2.0);
  return out;
}

int diameter(const Graph& g) { return distance_summary(g).diameter; }

double average_distance(const Graph& g) { return distance_summary(g).average_distance; }

double randic_index(const Graph& g) {
  // Neumaier summation: dense graphs add O(n^2) equal terms.
  double sum = 0.0;
  double carry = 0.0;
  for (auto [u, v] : g.edges()) {
    const double term = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

InvariantReport invariant_report(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.m = g.size();
  r.degree_sequence = g.degree_sequence();
  r.min_degree = r.degree_sequence.empty() ? 0 : r.degree_sequence.front();
  r.randic = randic_index(g);
  r.is_connected = r.n > 0 && is_connected(g);
  if (r.is_connected && r.n >= 2) {
    DistanceSummary s = distance_summary(g);
    r.diameter = s.diameter;
    r.avg_distance = s.average_distance;
  }
  return r;
}

}  // namespace randic
