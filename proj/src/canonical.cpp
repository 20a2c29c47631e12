#include <algorithm>
#include <numeric>
#include <string>

#include "randic/enumeration.hpp"

namespace randic {

namespace {

// Degree followed by the sorted degrees of the neighbours. Invariant under
// relabeling, so restricting the search to signature-sorted orders keeps the
// minimum canonical.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(g.order());
  for (int v = 0; v < g.order(); ++v) {
    sig[v].push_back(g.degree(v));
    for (int u = 0; u < g.order(); ++u) {
      if (g.adjacent(u, v)) sig[v].push_back(g.degree(u));
    }
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), pairs_(n_ * (n_ - 1) / 2) {
    auto sig = vertex_signatures(g);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    cell_.assign(n_, 0);
    for (int i = 1; i < n_; ++i) {
      cell_[i] = sig[order[i]] == sig[order[i - 1]] ? cell_[i - 1] : cell_[i - 1] + 1;
    }
    cell_of_vertex_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) cell_of_vertex_[order[i]] = cell_[i];
    placed_.assign(n_, -1);
  }

  void run() { extend(0, 0); }

  std::uint64_t best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void extend(int pos, std::uint64_t prefix) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = placed_;
        have_best_ = true;
      }
      return;
    }
    const int prefix_len = pos * (pos + 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1u || cell_of_vertex_[v] != cell_[pos]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(placed_[i], v) ? 1u : 0u);
      if (have_best_ && next > (best_ >> (pairs_ - prefix_len))) continue;
      placed_[pos] = v;
      used_ |= std::uint64_t{1} << v;
      extend(pos + 1, next);
      used_ &= ~(std::uint64_t{1} << v);
    }
  }

  const Graph& g_;
  int n_;
  int pairs_;
  std::vector<int> cell_;            // cell index required at each position
  std::vector<int> cell_of_vertex_;  // cell index of each vertex
  std::vector<int> placed_;
  std::uint64_t used_ = 0;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  std::vector<int> best_order_;
};

void require_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical key supports n <= " + std::to_string(kMaxCanonicalOrder) +
                                ", got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
  require_canonical_order(g);
  CanonicalSearch search(g);
  search.run();
  return {g.order(), search.best()};
}

Graph canonical_form(const Graph& g) {
  require_canonical_order(g);
  CanonicalSearch search(g);
  search.run();
  // best_order()[pos] is the original vertex placed at pos.
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[search.best_order()[pos]] = pos;
  return g.relabeled(perm);
}

}  // namespace randic
