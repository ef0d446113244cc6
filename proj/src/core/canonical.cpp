#include "cei/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cei/errors.hpp"
#include "cei/graph6.hpp"

namespace cei {

namespace {

using Word = std::uint64_t;

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::vector<int> colors) : n_(g.order()), rows_(n_), colors_(std::move(colors)) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.row_word(v);
    const std::size_t bits = n_ * (n_ - 1) / 2;
    key_words_ = std::max<std::size_t>(1, (bits + 63) / 64);
  }

  std::vector<Vertex> run() {
    // Normalise the caller's colours to dense cell indices 0..c-1.
    std::vector<int> distinct = colors_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> cell(n_);
    for (Vertex v = 0; v < n_; ++v) {
      cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors_[v]) - distinct.begin());
    }
    search(std::move(cell), static_cast<int>(distinct.size()));
    return best_order_;
  }

 private:
  // Splits cells by neighbour counts into every current cell until stable.
  // Relative cell order is preserved, so the result depends only on the
  // isomorphism type of (graph, partition).
  int refine(std::vector<int>& cell, int cells) const {
    std::vector<int> counts;
    std::vector<Vertex> idx(n_);
    for (;;) {
      std::vector<Word> mask(cells, 0);
      for (Vertex v = 0; v < n_; ++v) mask[cell[v]] |= Word{1} << v;
      counts.assign(n_ * cells, 0);
      for (Vertex v = 0; v < n_; ++v) {
        for (int c = 0; c < cells; ++c) counts[v * cells + c] = std::popcount(rows_[v] & mask[c]);
      }
      std::iota(idx.begin(), idx.end(), Vertex{0});
      auto less = [&](Vertex a, Vertex b) {
        if (cell[a] != cell[b]) return cell[a] < cell[b];
        return std::lexicographical_compare(counts.begin() + a * cells, counts.begin() + (a + 1) * cells,
                                            counts.begin() + b * cells, counts.begin() + (b + 1) * cells);
      };
      std::sort(idx.begin(), idx.end(), less);
      std::vector<int> next(n_);
      int label = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && less(idx[i - 1], idx[i])) ++label;
        next[idx[i]] = label;
      }
      const int next_cells = n_ == 0 ? 0 : label + 1;
      cell.swap(next);
      if (next_cells == cells) return cells;
      cells = next_cells;
    }
  }

  void search(std::vector<int> cell, int cells) {
    cells = refine(cell, cells);
    if (static_cast<std::size_t>(cells) == n_) {
      leaf(cell);
      return;
    }
    std::vector<std::size_t> size(cells, 0);
    for (Vertex v = 0; v < n_; ++v) ++size[cell[v]];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      // Twins are exchanged by an automorphism fixing everything else, so
      // their subtrees produce the same set of leaves.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        return (rows_[u] & ~(Word{1} << v)) == (rows_[v] & ~(Word{1} << u));
      });
      if (twin) continue;
      tried.push_back(v);

      std::vector<int> child(cell);
      for (Vertex w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      search(std::move(child), cells + 1);
    }
  }

  void leaf(const std::vector<int>& cell) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[cell[v]] = v;
    std::vector<Word> key(key_words_, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      const Word r = rows_[order[j]];
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if ((r >> order[i]) & 1u) key[k / 64] |= Word{1} << (63 - k % 64);
      }
    }
    if (best_order_.empty() || key < best_key_) {
      best_key_ = std::move(key);
      best_order_ = std::move(order);
    }
  }

  std::size_t n_;
  std::vector<Word> rows_;
  std::vector<int> colors_;
  std::size_t key_words_ = 1;
  std::vector<Word> best_key_;
  std::vector<Vertex> best_order_;
};

void check_order(const Graph& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxCanonicalOrder);
  if (g.order() == 0) throw InvalidArgument("canonical form of the empty graph K_0");
  if (g.order() > limit) {
    throw CapExceeded("canonical form supports n <= " + std::to_string(limit) + ", got n = " +
                      std::to_string(g.order()));
  }
}

}  // namespace

Canonization canonize(const Graph& g, std::span<const int> colors, std::size_t cap) {
  check_order(g, cap);
  const std::size_t n = g.order();
  std::vector<int> initial(n, 0);
  if (!colors.empty()) {
    if (colors.size() != n) throw InvalidArgument("colour vector size differs from graph order");
    initial.assign(colors.begin(), colors.end());
  }
  Canonization out;
  out.order = CanonSearch(g, std::move(initial)).run();
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[out.order[i]] = i;
  out.graph = relabel(g, perm);
  out.label.graph6 = to_graph6(out.graph);
  return out;
}

CanonicalLabel canonical_form(const Graph& g, std::size_t cap) { return canonize(g, {}, cap).label; }

bool same_orbit(const Graph& g, Vertex a, Vertex b, std::size_t cap) {
  check_order(g, cap);
  if (a >= g.order() || b >= g.order()) throw InvalidArgument("vertex out of range");
  if (a == b) return true;
  if (g.degree(a) != g.degree(b)) return false;
  std::vector<int> ca(g.order(), 1), cb(g.order(), 1);
  ca[a] = 0;
  cb[b] = 0;
  return canonize(g, ca, cap).graph == canonize(g, cb, cap).graph;
}

}  // namespace cei
