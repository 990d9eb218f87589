#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rothlab/composite.hpp"
#include "rothlab/graph.hpp"

namespace rothlab {

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest t*s enumerated without allow_long.
inline constexpr std::size_t kExhaustiveCellLimit = 40;

struct BipartiteEnumeration {
  std::size_t t = 0;
  std::size_t s = 0;
  bool allow_long = false;
  /// Identify a scaffold with its transpose (only meaningful when s == t).
  bool quotient_swap = false;
};

/// Calls `visit` once per isomorphism class of connected bipartite graphs
/// with parts of sizes t (rows) and s (columns), in a deterministic order.
/// Classes are taken under independent row and column permutations.
void for_each_connected_bipartite(const BipartiteEnumeration& spec,
                                  const std::function<void(const Biadjacency&)>& visit);

std::vector<Biadjacency> enumerate_connected_bipartite(std::size_t t, std::size_t s, bool allow_long = false);

/// Canonical representative of the class of k under row and column
/// permutations (and transposition when swap is set and k is square).
Biadjacency canonical_biadjacency(const Biadjacency& k, bool swap = false);

/// Canonical code of a graph with at most 11 vertices: equal iff isomorphic.
std::uint64_t canonical_graph_code(const Graph& g);

/// All graphs on n <= 10 vertices up to isomorphism, canonical labelling.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// All trees on n <= 11 vertices up to isomorphism.
std::vector<Graph> enumerate_trees(std::size_t n);

/// Bipartite graph on t + s vertices (T first) with biadjacency k.
Graph scaffold_graph(const Biadjacency& k);
/// Inverse of scaffold_graph for a graph whose first t vertices form T.
Biadjacency scaffold_from_graph(const Graph& g, std::size_t t);

}  // namespace rothlab
