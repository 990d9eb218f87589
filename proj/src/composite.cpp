#include "rothlab/composite.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "rothlab/rng.hpp"

namespace rothlab {

Biadjacency Biadjacency::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Biadjacency k(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw GraphError("biadjacency rows have unequal length");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw GraphError("biadjacency entries must be 0/1");
      k.set(i, j, rows[i][j] == 1);
    }
  }
  return k;
}

std::size_t Biadjacency::row_sum(std::size_t i) const {
  std::size_t sum = 0;
  for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j);
  return sum;
}

std::size_t Biadjacency::col_sum(std::size_t j) const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, j);
  return sum;
}

bool Biadjacency::is_complete() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

Biadjacency Biadjacency::transposed() const {
  Biadjacency tr(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) tr.set(j, i, (*this)(i, j));
  return tr;
}

VertexSet CompositeInstance::t_vertices() const {
  VertexSet v(t());
  for (std::size_t i = 0; i < t(); ++i) v[i] = i;
  return v;
}

VertexSet CompositeInstance::s_vertices() const {
  VertexSet v(s());
  for (std::size_t j = 0; j < s(); ++j) v[j] = t() + j;
  return v;
}

CompositeInstance compose(std::size_t s, const Graph& g, const std::optional<Biadjacency>& scaffold) {
  const std::size_t t = g.order();
  if (s == 0 || t == 0) throw GraphError("compose: both sides must be nonempty");
  Biadjacency k = scaffold ? *scaffold : Biadjacency(t, s, true);
  if (k.rows() != t || k.cols() != s) throw GraphError("compose: scaffold shape mismatch");

  CompositeInstance inst;
  inst.k_ = k;
  inst.intra_ = g;
  inst.scaffold_ = Graph(t + s);
  inst.d1_.assign(t, 0);
  inst.d2_.assign(s, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (!k(i, j)) continue;
      inst.scaffold_.add_edge(i, t + j);
      ++inst.d1_[i];
      ++inst.d2_[j];
    }
  }
  if (std::find(inst.d2_.begin(), inst.d2_.end(), 0u) != inst.d2_.end())
    throw GraphError("compose: an S-vertex has no neighbour in T");

  inst.h_ = inst.scaffold_;
  for (const auto& [u, v] : g.edges()) inst.h_.add_edge(u, v);
  if (!is_connected(inst.h_)) throw GraphError("compose: H is disconnected");
  inst.s_maximal_ = std::find(inst.d1_.begin(), inst.d1_.end(), 0u) == inst.d1_.end();
  return inst;
}

CompositeInstance from_graph(const Graph& h, const VertexSet& s_vertices) {
  const std::size_t n = h.order();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s_vertices) {
    if (v >= n) throw GraphError("S-vertex out of range");
    if (in_s[v]) throw GraphError("duplicate S-vertex");
    in_s[v] = true;
  }
  if (!is_independent(h, s_vertices)) throw GraphError("S is not independent in H");

  VertexSet t_list;
  for (Vertex v = 0; v < n; ++v)
    if (!in_s[v]) t_list.push_back(v);
  VertexSet s_list = s_vertices;
  std::sort(s_list.begin(), s_list.end());

  Graph g = induced_subgraph(h, t_list);
  Biadjacency k(t_list.size(), s_list.size());
  for (std::size_t i = 0; i < t_list.size(); ++i)
    for (std::size_t j = 0; j < s_list.size(); ++j) k.set(i, j, h.has_edge(t_list[i], s_list[j]));
  return compose(s_list.size(), g, k);
}

VertexSet common_neighbors(const CompositeInstance& inst, Vertex i, Vertex j) {
  if (i == j) throw GraphError("common_neighbors: i == j");
  if (i >= inst.t() || j >= inst.t()) throw GraphError("common_neighbors: not a T-vertex");
  VertexSet out;
  for (std::size_t k = 0; k < inst.s(); ++k)
    if (inst.k()(i, k) && inst.k()(j, k)) out.push_back(k);
  return out;
}

namespace {

struct NoiseVisitor {
  Biadjacency& k;
  Graph& g;

  void operator()(const DeleteCross& op) const {
    if (op.t_vertex >= k.rows() || op.s_column >= k.cols() || !k(op.t_vertex, op.s_column))
      throw GraphError("noise: DeleteCross targets a missing B-edge");
    k.set(op.t_vertex, op.s_column, false);
  }
  void operator()(const AddIntra& op) const {
    if (op.u >= g.order() || op.v >= g.order() || op.u == op.v || g.has_edge(op.u, op.v))
      throw GraphError("noise: AddIntra targets an existing edge or invalid pair");
    g.add_edge(op.u, op.v);
  }
};

}  // namespace

CompositeInstance apply_noise(const CompositeInstance& inst, const std::vector<NoiseOp>& ops) {
  if (ops.empty()) return inst;
  Biadjacency k = inst.k();
  Graph g = inst.intra();
  for (const auto& op : ops) std::visit(NoiseVisitor{k, g}, op);
  return compose(inst.s(), g, k);
}

std::vector<NoiseOp> sample_noise(const CompositeInstance& inst, std::size_t deletions,
                                  std::size_t additions, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NoiseOp> ops;
  Biadjacency k = inst.k();
  Graph g = inst.intra();

  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  if (additions > non_edges.size()) throw GraphError("noise: too many additions requested");
  std::shuffle(non_edges.begin(), non_edges.end(), rng);
  for (std::size_t a = 0; a < additions; ++a) {
    ops.emplace_back(AddIntra{non_edges[a].first, non_edges[a].second});
    g.add_edge(non_edges[a].first, non_edges[a].second);
  }

  for (std::size_t d = 0; d < deletions; ++d) {
    std::vector<std::pair<Vertex, std::size_t>> candidates;
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (std::size_t j = 0; j < k.cols(); ++j)
        if (k(i, j) && k.col_sum(j) > 1) candidates.emplace_back(i, j);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    bool placed = false;
    for (const auto& [i, j] : candidates) {
      k.set(i, j, false);
      try {
        compose(k.cols(), g, k);
      } catch (const GraphError&) {
        k.set(i, j, true);
        continue;
      }
      ops.emplace_back(DeleteCross{i, j});
      placed = true;
      break;
    }
    if (!placed) throw GraphError("noise: no valid cross deletion left");
  }
  return ops;
}

std::string to_json(const CompositeInstance& inst) {
  nlohmann::json j;
  j["n"] = inst.order();
  j["s"] = inst.s();
  j["t"] = inst.t();
  j["S"] = inst.s_vertices();
  j["T"] = inst.t_vertices();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : inst.h().edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump();
}

}  // namespace rothlab
