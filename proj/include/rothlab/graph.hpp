#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rothlab {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1, stored as sorted adjacency sets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  static Graph empty(std::size_t n) { return Graph(n); }
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// Parts {0..a-1} and {a..a+b-1}.
  static Graph complete_bipartite(std::size_t a, std::size_t b);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  /// Returns false if the edge was already present. Throws on loops or
  /// out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Edges (u,v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);

/// Maximal connected vertex sets, each sorted, listed by least element.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertex sets of the maximal join decomposition G = G_1 v ... v G_k, i.e. the
/// connected components of the complement. k == 1 iff g is not a join.
std::vector<VertexSet> join_decomposition(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& vertices);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertices of a come first, then those of b shifted by a.order().
Graph join(const Graph& a, const Graph& b);
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

bool is_bipartite(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& vertices);

/// Edge-list text: one "u v" pair per line, 0-based, '#' starts a comment.
/// The vertex count is max index + 1, raised to min_order or to a
/// "# n <count>" comment line when either is larger.
Graph parse_edge_list(std::string_view text, std::size_t min_order = 0);
std::string emit_edge_list(const Graph& g);

}  // namespace rothlab
