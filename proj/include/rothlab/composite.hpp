#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rothlab/graph.hpp"

namespace rothlab {

/// 0/1 biadjacency matrix, rows indexed by T, columns by S.
class Biadjacency {
 public:
  Biadjacency() = default;
  Biadjacency(std::size_t rows, std::size_t cols, bool fill = false)
      : rows_(rows), cols_(cols), bits_(rows * cols, fill ? 1 : 0) {}
  static Biadjacency from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t row_sum(std::size_t i) const;
  std::size_t col_sum(std::size_t j) const;
  bool is_complete() const;
  Biadjacency transposed() const;

  friend bool operator==(const Biadjacency&, const Biadjacency&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// H = B + G with S independent, stored in T-first vertex order:
/// H-vertices 0..t-1 are T (the vertices of G), t..t+s-1 are S.
class CompositeInstance {
 public:
  std::size_t s() const { return k_.cols(); }
  std::size_t t() const { return k_.rows(); }
  std::size_t order() const { return h_.order(); }

  const Graph& h() const { return h_; }
  const Graph& scaffold() const { return scaffold_; }
  const Graph& intra() const { return intra_; }
  const Biadjacency& k() const { return k_; }
  /// Number of S-neighbours of each T-vertex.
  const std::vector<std::size_t>& d1() const { return d1_; }
  /// Degrees of the S-vertices.
  const std::vector<std::size_t>& d2() const { return d2_; }

  VertexSet t_vertices() const;
  VertexSet s_vertices() const;
  /// H-index of the j-th S-vertex.
  Vertex s_vertex(std::size_t j) const { return t() + j; }

  /// Every T-vertex has a neighbour in S, i.e. S is a maximal independent set.
  bool s_maximal() const { return s_maximal_; }
  bool complete_scaffold() const { return k_.is_complete(); }

  friend CompositeInstance compose(std::size_t s, const Graph& g,
                                   const std::optional<Biadjacency>& scaffold);

 private:
  Graph h_;
  Graph scaffold_;
  Graph intra_;
  Biadjacency k_;
  std::vector<std::size_t> d1_;
  std::vector<std::size_t> d2_;
  bool s_maximal_ = true;
};

/// Builds H from s, the intra graph G on T, and the T-by-S biadjacency
/// (complete when omitted). Throws GraphError if K has a zero column or H
/// is disconnected.
CompositeInstance compose(std::size_t s, const Graph& g,
                          const std::optional<Biadjacency>& scaffold = std::nullopt);

/// Reorders an arbitrary graph H into T-first form for the given S.
/// Throws GraphError if S is not independent or the result is invalid.
CompositeInstance from_graph(const Graph& h, const VertexSet& s_vertices);

/// S-columns adjacent in B to both T-vertices i and j (column indices 0..s-1).
VertexSet common_neighbors(const CompositeInstance& inst, Vertex i, Vertex j);

struct DeleteCross {
  Vertex t_vertex;
  std::size_t s_column;
};
struct AddIntra {
  Vertex u;
  Vertex v;
};
using NoiseOp = std::variant<DeleteCross, AddIntra>;

/// Applies the operations in order. Throws GraphError if an operation targets
/// a missing B-edge or an existing G-edge, or if the result is invalid.
CompositeInstance apply_noise(const CompositeInstance& inst, const std::vector<NoiseOp>& ops);

/// Draws `deletions` distinct cross deletions and `additions` distinct intra
/// additions uniformly, rejecting deletions that would empty a column or
/// disconnect H. Deterministic in seed. Throws GraphError if infeasible.
std::vector<NoiseOp> sample_noise(const CompositeInstance& inst, std::size_t deletions,
                                  std::size_t additions, std::uint64_t seed);

/// {n, s, t, S, T, edges}
std::string to_json(const CompositeInstance& inst);

}  // namespace rothlab
