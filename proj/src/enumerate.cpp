#include "rothlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rothlab {

namespace {

using Mask = std::uint32_t;
using Sequence = std::vector<Mask>;

// For every permutation of r rows, a table sending a column mask to its image.
struct RowPermTables {
  std::size_t rows = 0;
  std::vector<std::vector<Mask>> tables;

  explicit RowPermTables(std::size_t r) : rows(r) {
    if (r > 8) throw EnumerationError("bipartite enumeration supports at most 8 rows on the smaller side");
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    const Mask full = Mask{1} << r;
    do {
      std::vector<Mask> table(full);
      for (Mask m = 0; m < full; ++m) {
        Mask img = 0;
        for (std::size_t b = 0; b < r; ++b)
          if (m >> b & 1) img |= Mask{1} << perm[b];
        table[m] = img;
      }
      tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Least sorted image of seq over all row permutations.
  Sequence minimum(const Sequence& seq) const {
    Sequence best = seq;
    std::sort(best.begin(), best.end());
    Sequence img(seq.size());
    for (const auto& table : tables) {
      for (std::size_t j = 0; j < seq.size(); ++j) img[j] = table[seq[j]];
      std::sort(img.begin(), img.end());
      if (img < best) best = img;
    }
    return best;
  }

  // seq (sorted) is the least image under all row permutations.
  bool is_minimal(const Sequence& seq, Sequence& img) const {
    for (const auto& table : tables) {
      for (std::size_t j = 0; j < seq.size(); ++j) img[j] = table[seq[j]];
      std::sort(img.begin(), img.end());
      if (img < seq) return false;
    }
    return true;
  }
};

// Rows of a column-mask sequence, as masks over the columns.
Sequence transpose_sequence(const Sequence& seq, std::size_t rows) {
  Sequence out(rows, 0);
  for (std::size_t j = 0; j < seq.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (seq[j] >> i & 1) out[i] |= Mask{1} << j;
  return out;
}

bool connected_cover(const Sequence& seq, std::size_t rows) {
  // grow the set of rows reachable from row 0 through shared columns
  Mask reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask m : seq) {
      if ((m & reached) && (m | reached) != reached) {
        reached |= m;
        grew = true;
      }
    }
  }
  const Mask all = rows >= 32 ? ~Mask{0} : (Mask{1} << rows) - 1;
  return reached == all && std::all_of(seq.begin(), seq.end(), [](Mask m) { return m != 0; });
}

Biadjacency from_sequence(const Sequence& seq, std::size_t rows) {
  Biadjacency k(rows, seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) k.set(i, j, seq[j] >> i & 1);
  return k;
}

Sequence to_sequence(const Biadjacency& k) {
  Sequence seq(k.cols(), 0);
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < k.rows(); ++i)
      if (k(i, j)) seq[j] |= Mask{1} << i;
  return seq;
}

}  // namespace

void for_each_connected_bipartite(const BipartiteEnumeration& spec,
                                  const std::function<void(const Biadjacency&)>& visit) {
  if (spec.t == 0 || spec.s == 0) throw EnumerationError("part sizes must be positive");
  if (spec.t * spec.s > kExhaustiveCellLimit && !spec.allow_long)
    throw EnumerationError("t*s exceeds the exhaustive limit; pass allow_long to proceed");

  // Enumerate multisets of nonzero column masks over the smaller side.
  const bool transposed = spec.t > spec.s;
  const std::size_t rows = transposed ? spec.s : spec.t;
  const std::size_t cols = transposed ? spec.t : spec.s;
  const bool swap = spec.quotient_swap && rows == cols;
  const RowPermTables perms(rows);
  const Mask top = (Mask{1} << rows) - 1;

  Sequence seq(cols, 1);
  Sequence img(cols);
  // odometer over nondecreasing sequences
  while (true) {
    if (connected_cover(seq, rows) && perms.is_minimal(seq, img) &&
        (!swap || !(perms.minimum(transpose_sequence(seq, rows)) < seq))) {
      const Biadjacency k = from_sequence(seq, rows);
      visit(transposed ? k.transposed() : k);
    }
    std::size_t pos = cols;
    while (pos > 0 && seq[pos - 1] == top) --pos;
    if (pos == 0) break;
    const Mask next = seq[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < cols; ++j) seq[j] = next;
  }
}

std::vector<Biadjacency> enumerate_connected_bipartite(std::size_t t, std::size_t s, bool allow_long) {
  std::vector<Biadjacency> out;
  for_each_connected_bipartite({t, s, allow_long, false}, [&](const Biadjacency& k) { out.push_back(k); });
  return out;
}

Biadjacency canonical_biadjacency(const Biadjacency& k, bool swap) {
  if (k.rows() > k.cols()) {
    if (swap) throw EnumerationError("swap canonical form needs a square matrix");
    return canonical_biadjacency(k.transposed()).transposed();
  }
  const RowPermTables perms(k.rows());
  Sequence best = perms.minimum(to_sequence(k));
  if (swap && k.rows() == k.cols()) {
    Sequence alt = perms.minimum(to_sequence(k.transposed()));
    if (alt < best) best = alt;
  }
  return from_sequence(best, k.rows());
}

namespace {

using AdjRows = std::vector<std::uint16_t>;

AdjRows adjacency_rows(const Graph& g) {
  AdjRows adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return adj;
}

std::uint64_t code_of(const AdjRows& adj, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
  return code;
}

// Ordered cells of the stable colour refinement, started from degrees.
std::vector<std::vector<std::size_t>> refined_cells(const AdjRows& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<std::size_t>(__builtin_popcount(adj[v]));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> s{color[v]};
      std::vector<std::size_t> nb;
      for (std::size_t w = 0; w < n; ++w)
        if (adj[v] >> w & 1) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<std::size_t>> keys;
    for (const auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  std::vector<std::vector<std::size_t>> cells(classes);
  for (std::size_t v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

struct CanonicalSearch {
  const AdjRows& adj;
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> order;
  std::uint64_t best = 0;
  std::vector<std::size_t> best_order;
  bool found = false;

  void run(std::size_t cell) {
    if (cell == cells.size()) {
      const std::uint64_t c = code_of(adj, order);
      if (!found || c > best) {
        best = c;
        best_order = order;
        found = true;
      }
      return;
    }
    auto members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      order.insert(order.end(), members.begin(), members.end());
      run(cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  }
};

std::pair<std::uint64_t, Graph> canonical_form(const Graph& g) {
  if (g.order() > 11) throw EnumerationError("canonical graph codes support at most 11 vertices");
  const AdjRows adj = adjacency_rows(g);
  CanonicalSearch search{adj, refined_cells(adj), {}, 0, {}, false};
  search.run(0);
  // best_order[i] is the vertex placed at position i
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) perm[search.best_order[i]] = i;
  return {search.best, relabel(g, perm)};
}

template <class Extend>
std::vector<Graph> grow(std::size_t n, const std::vector<Graph>& seed, std::size_t seed_order, Extend extend) {
  std::vector<Graph> level = seed;
  for (std::size_t m = seed_order + 1; m <= n; ++m) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : level)
      extend(g, [&](const Graph& h) {
        auto [code, canon] = canonical_form(h);
        next.emplace(code, std::move(canon));
      });
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace

std::uint64_t canonical_graph_code(const Graph& g) { return canonical_form(g).first; }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > 10) throw EnumerationError("enumerate_graphs supports at most 10 vertices");
  if (n == 0) return {Graph(0)};
  return grow(n, {Graph(1)}, 1, [](const Graph& g, auto&& emit) {
    const std::size_t m = g.order();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      Graph h(m + 1);
      for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
      for (std::size_t v = 0; v < m; ++v)
        if (mask >> v & 1) h.add_edge(v, m);
      emit(h);
    }
  });
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n > 11) throw EnumerationError("enumerate_trees supports at most 11 vertices");
  if (n == 0) return {};
  return grow(n, {Graph(1)}, 1, [](const Graph& g, auto&& emit) {
    const std::size_t m = g.order();
    for (std::size_t v = 0; v < m; ++v) {
      Graph h(m + 1);
      for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
      h.add_edge(v, m);
      emit(h);
    }
  });
}

Graph scaffold_graph(const Biadjacency& k) {
  Graph g(k.rows() + k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      if (k(i, j)) g.add_edge(i, k.rows() + j);
  return g;
}

Biadjacency scaffold_from_graph(const Graph& g, std::size_t t) {
  if (t > g.order()) throw GraphError("scaffold_from_graph: t exceeds order");
  const std::size_t s = g.order() - t;
  for (const auto& [u, v] : g.edges())
    if ((u < t) == (v < t)) throw GraphError("scaffold_from_graph: edge inside a part");
  Biadjacency k(t, s);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < s; ++j) k.set(i, j, g.has_edge(i, t + j));
  return k;
}

}  // namespace rothlab
