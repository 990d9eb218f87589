#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "rothlab/composite.hpp"
#include "rothlab/enumerate.hpp"
#include "rothlab/rng.hpp"

namespace fixtures {

using rothlab::Biadjacency;
using rothlab::CompositeInstance;
using rothlab::Graph;

// Four worked instances with t = 4, s = 7, G = K4; K rows are T, columns S.
inline CompositeInstance example1() {
  return rothlab::compose(7, Graph::complete(4),
                          Biadjacency::from_rows({{1, 1, 1, 1, 0, 0, 0},
                                                  {1, 1, 1, 1, 0, 0, 0},
                                                  {1, 1, 1, 1, 0, 0, 0},
                                                  {1, 1, 1, 1, 1, 1, 1}}));
}

inline CompositeInstance example2() {
  return rothlab::compose(7, Graph::complete(4),
                          Biadjacency::from_rows({{1, 1, 1, 1, 1, 0, 0},
                                                  {1, 1, 1, 0, 0, 1, 1},
                                                  {1, 1, 0, 1, 1, 1, 0},
                                                  {1, 1, 1, 1, 0, 1, 0}}));
}

inline CompositeInstance example3() {
  return rothlab::compose(7, Graph::complete(4),
                          Biadjacency::from_rows({{1, 1, 1, 0, 0, 0, 0},
                                                  {1, 0, 0, 1, 1, 0, 0},
                                                  {1, 0, 0, 0, 0, 1, 1},
                                                  {1, 1, 1, 1, 1, 1, 1}}));
}

inline CompositeInstance example4() {
  return rothlab::compose(7, Graph::complete(4),
                          Biadjacency::from_rows({{1, 1, 0, 0, 0, 0, 0},
                                                  {0, 0, 1, 1, 0, 0, 0},
                                                  {1, 0, 1, 0, 1, 0, 0},
                                                  {1, 1, 1, 1, 1, 1, 1}}));
}

// K_s-bar join K_{4,2} with s = 4: mu = t - s = 2 with zero entries.
inline CompositeInstance complete_bipartite_intra() {
  return rothlab::compose(4, Graph::complete_bipartite(4, 2));
}

inline const std::vector<double> kExample1Mu{0.63226};
inline const std::vector<double> kExample1X{0.008,   0.008,   0.008,   0.2057,  -0.0682, -0.0682,
                                            -0.0682, -0.0682, -0.5594, -0.5594, -0.5594};
inline const std::vector<std::vector<double>> kExample1QMu{{5.8123, -0.18774, -0.18774, -0.18774},
                                                           {-0.18774, 5.8123, -0.18774, -0.18774},
                                                           {-0.18774, -0.18774, 5.8123, -0.18774},
                                                           {-0.18774, -0.18774, -0.18774, 0.65427}};
inline const std::vector<std::vector<double>> kExample2QMu{{5.6058, -0.08776, -0.93542, -0.54653},
                                                           {-0.08776, 0.88934, -0.08776, -0.54653},
                                                           {-0.93542, -0.08776, 5.6058, -0.54653},
                                                           {-0.54653, -0.54653, -0.54653, 5.9947}};
inline const std::vector<std::vector<double>> kExample3QMu{{3.453, 0.6561, 0.6561, -1.547},
                                                           {0.6561, 3.453, 0.6561, -1.547},
                                                           {0.6561, 0.6561, 3.453, -1.547},
                                                           {-1.547, -1.547, -1.547, 3.0468}};
inline const std::vector<std::vector<double>> kExample3QMuInv{{0.37674, 0.019201, 0.019201, 0.21078},
                                                              {0.019201, 0.37674, 0.019201, 0.21078},
                                                              {0.019201, 0.019201, 0.37674, 0.21078},
                                                              {0.21078, 0.21078, 0.21078, 0.64927}};
inline const std::vector<std::vector<double>> kExample4QMu{{3.8172, 1, 0.57038, -0.18282},
                                                           {1, 3.8172, 0.57038, -0.18282},
                                                           {0.57038, 0.57038, 4.3876, -0.61244},
                                                           {-0.18282, -0.18282, -0.61244, 0.77727}};
inline const std::vector<double> kExample4W{0.0047565, 0.0047565, 0.033593, 0.21264};

// Random connected graph on n vertices: a random tree plus edges of density p.
inline Graph random_connected_graph(std::size_t n, double p, rothlab::Rng& rng) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(std::size_t n, double p, rothlab::Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random valid composite: connected scaffold without zero columns, random G.
inline CompositeInstance random_instance(std::size_t s, std::size_t t, rothlab::Rng& rng) {
  std::bernoulli_distribution cross(0.5);
  while (true) {
    Biadjacency k(t, s);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) k.set(i, j, cross(rng));
    const Graph g = random_graph(t, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
    try {
      return rothlab::compose(s, g, k);
    } catch (const rothlab::GraphError&) {
    }
  }
}

}  // namespace fixtures
