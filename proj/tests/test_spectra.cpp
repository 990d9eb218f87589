#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "fixtures.hpp"
#include "rothlab/exact.hpp"
#include "rothlab/spectra.hpp"

using namespace rothlab;

namespace {

Eigen::MatrixXd to_eigen(const SymmetricMatrix& m) {
  Eigen::MatrixXd e(m.order(), m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) e(i, j) = m(i, j);
  return e;
}

Eigen::VectorXd eigen_oracle(const SymmetricMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(to_eigen(m)).eigenvalues();
}

SymmetricMatrix random_symmetric(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

}  // namespace

TEST_CASE("signless and ordinary Laplacian of K2") {
  const SymmetricMatrix q = signless_laplacian(Graph::complete(2));
  CHECK(q(0, 0) == 1.0);
  CHECK(q(0, 1) == 1.0);
  const SymmetricMatrix l = laplacian(Graph::complete(2));
  CHECK(l(1, 1) == 1.0);
  CHECK(l(0, 1) == -1.0);
}

TEST_CASE("Laplacian rows sum to zero") {
  Rng rng = split_rng(5, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = fixtures::random_graph(12, 0.4, rng);
    for (double r : row_sums(laplacian(g).matrix())) CHECK(r == 0.0);
  }
}

TEST_CASE("spectrum of Q(C3) is {1, 1, 4}") {
  const EigenSystem es = full_spectrum(signless_laplacian(Graph::cycle(3)));
  CHECK(es.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.eigenvalues[2] == doctest::Approx(4.0).epsilon(1e-12));
  const SmallestEigenpair sp = smallest_eigenpair(es);
  CHECK(sp.multiplicity == 2);
}

TEST_CASE("identity spectrum") {
  const EigenSystem es = full_spectrum(SymmetricMatrix(Matrix::identity(3)));
  for (double v : es.eigenvalues) CHECK(v == doctest::Approx(1.0));
  CHECK(smallest_eigenpair(es).multiplicity == 3);
}

TEST_CASE("bipartite graphs have mu = 0") {
  CHECK(std::abs(smallest_eigenpair(signless_laplacian(Graph::cycle(4))).mu) < 1e-12);
  const SmallestEigenpair k2 = smallest_eigenpair(signless_laplacian(Graph::complete(2)));
  CHECK(std::abs(k2.mu) < 1e-12);
  CHECK(k2.vector[0] == doctest::Approx(-k2.vector[1]));
  CHECK(std::abs(std::abs(k2.vector[0]) - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("Jacobi agrees with an independent solver on random symmetric matrices") {
  Rng rng = split_rng(17, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const SymmetricMatrix m = random_symmetric(n, rng);
    const EigenSystem es = full_spectrum(m);
    const Eigen::VectorXd ref = eigen_oracle(m);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(es.eigenvalues[i] - ref(static_cast<Eigen::Index>(i))) < 1e-9);
    CHECK(es.residual_bound <= tol::kEig * (1.0 + inf_norm(m.matrix())));
    // orthonormal eigenvectors
    const Matrix vtv = transpose(es.eigenvectors) * es.eigenvectors;
    CHECK(max_abs_diff(vtv, Matrix::identity(n)) < 1e-10);
  }
}

TEST_CASE("Jacobi agrees with an independent solver on signless Laplacians") {
  Rng rng = split_rng(17, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = fixtures::random_graph(3 + rng() % 30, 0.3, rng);
    const SymmetricMatrix q = signless_laplacian(g);
    const EigenSystem es = full_spectrum(q);
    const Eigen::VectorXd ref = eigen_oracle(q);
    for (std::size_t i = 0; i < q.order(); ++i)
      CHECK(std::abs(es.eigenvalues[i] - ref(static_cast<Eigen::Index>(i))) < 1e-9);
  }
}

TEST_CASE("smallest eigenpair of the first worked composite") {
  const CompositeEigenpair ep = smallest_eigenpair(fixtures::example1());
  CHECK(std::abs(ep.mu - 0.63226) < 5e-5);
  CHECK(ep.multiplicity == 1);
  CHECK(ep.w.size() == 4);
  CHECK(ep.z.size() == 7);
  double zsum = 0.0;
  for (double v : ep.z) zsum += v;
  CHECK(zsum >= 0.0);
  CHECK(std::abs(norm2(ep.vector) - 1.0) < 1e-12);
}

TEST_CASE("K2-bar join K3 has mu above t - s") {
  const CompositeEigenpair ep = smallest_eigenpair(compose(2, Graph::complete(3)));
  CHECK(ep.mu > 1.0 + 1e-6);
}

TEST_CASE("zero-entry eigenvector for K4-bar join K_{4,2}") {
  const CompositeInstance inst = fixtures::complete_bipartite_intra();
  const CompositeEigenpair ep = smallest_eigenpair(inst);
  CHECK(std::abs(ep.mu - 2.0) < 1e-9);
  const SymmetricMatrix q = signless_laplacian(inst.h());
  const std::vector<std::int64_t> x{1, 1, 1, 1, 0, 0, -1, -1, -1, -1};
  CHECK(exact_eigenvector_check(q, x, 2));
  const ExactKernel ker = exact_kernel(q, 2);
  REQUIRE(ker.nullity >= 1);
  bool has_zero_pair = false;
  for (const auto& b : ker.basis) has_zero_pair |= (b[4] == 0 && b[5] == 0);
  CHECK(has_zero_pair);
}

TEST_CASE("exact kernels") {
  const ExactKernel k2 = exact_kernel(signless_laplacian(Graph::complete(2)), 0);
  REQUIRE(k2.nullity == 1);
  CHECK(k2.basis[0][0] == -k2.basis[0][1]);
  CHECK(exact_kernel_dim(signless_laplacian(Graph::cycle(3)), 1) == 2);
  CHECK(exact_kernel_dim(signless_laplacian(Graph::cycle(3)), 4) == 1);
  CHECK(exact_kernel_dim(signless_laplacian(Graph::cycle(3)), 2) == 0);
  SymmetricMatrix frac(2);
  frac.set(0, 0, 0.5);
  CHECK_THROWS_AS(exact_kernel(frac, 0), LinalgError);
}

TEST_CASE("exact kernel dimension matches numerical multiplicity") {
  Rng rng = split_rng(23, 4);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = fixtures::random_graph(2 + rng() % 9, 0.5, rng);
    const SymmetricMatrix q = signless_laplacian(g);
    const EigenSystem es = full_spectrum(q);
    for (std::int64_t c = 0; c <= static_cast<std::int64_t>(2 * g.order()); ++c) {
      std::size_t near = 0;
      bool clean = true;
      for (double v : es.eigenvalues) {
        const double d = std::abs(v - static_cast<double>(c));
        if (d < 1e-9) ++near;
        else if (d <= 1e-6) clean = false;
      }
      if (!clean) continue;
      CHECK(exact_kernel_dim(q, c) == near);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("Rayleigh quotient") {
  const std::vector<double> ones{1.0, 1.0};
  CHECK(rayleigh_quotient_signless(Graph::complete(2), ones) == doctest::Approx(2.0));
  const std::vector<double> signs{1.0, -1.0, 1.0, -1.0};
  CHECK(rayleigh_quotient_signless(Graph::cycle(4), signs) == doctest::Approx(0.0));
  CHECK_THROWS(rayleigh_quotient_signless(Graph::complete(2), std::vector<double>{0.0, 0.0}));

  Rng rng = split_rng(3, 5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = fixtures::random_connected_graph(10, 0.3, rng);
    const double mu = smallest_eigenpair(signless_laplacian(g)).mu;
    for (int k = 0; k < 200; ++k) {
      std::vector<double> x(10);
      for (double& v : x) v = normal(rng);
      CHECK(rayleigh_quotient_signless(g, x) >= mu - 1e-10);
    }
  }
}

TEST_CASE("cut vector attains 4e / (s + t)") {
  const CompositeInstance inst = fixtures::complete_bipartite_intra();
  std::vector<double> x(inst.order(), 1.0);
  for (Vertex v : inst.t_vertices()) x[v] = -1.0;
  CHECK(rayleigh_quotient_signless(inst.h(), x) == doctest::Approx(mu_upper_bound_cut(inst)));
  CHECK(mu_upper_bound_cut(inst) == doctest::Approx(3.2));
  CHECK(mu_upper_bound_cut(compose(3, Graph(4), Biadjacency(4, 3, true))) == 0.0);
}

TEST_CASE("degree lower bound") {
  CHECK(mu_lower_bound_degrees(Graph::complete(2)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mu_lower_bound_degrees(Graph::cycle(3)) == doctest::Approx(1.0));
  // K_s-bar join G with delta(G) >= t - s: bound is t - s
  Graph g = Graph::cycle(7);
  g.add_edge(0, 3);
  const CompositeInstance inst = compose(5, g);
  CHECK(mu_lower_bound_degrees(inst.h()) == doctest::Approx(2.0));
}

TEST_CASE("largest Laplacian eigenvalue of a join is its order") {
  Rng rng = split_rng(31, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a = fixtures::random_graph(1 + rng() % 8, 0.4, rng);
    const Graph b = fixtures::random_graph(1 + rng() % 8, 0.4, rng);
    const Graph j = join(a, b);
    CHECK(std::abs(largest_eigenvalue(laplacian(j)) - static_cast<double>(j.order())) < 1e-9);
  }
}

TEST_CASE("connected bipartite graphs have a +/- constant-magnitude-sign smallest eigenvector") {
  Rng rng = split_rng(37, 7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t a = 1 + rng() % 6, b = 1 + rng() % 6;
    Biadjacency k(a, b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) k.set(i, j, rng() % 2);
    const Graph g = scaffold_graph(k);
    if (!is_connected(g)) continue;
    const SmallestEigenpair sp = smallest_eigenpair(signless_laplacian(g));
    CHECK(std::abs(sp.mu) < 1e-10);
    CHECK(sp.multiplicity == 1);
    for (std::size_t v = 0; v < g.order(); ++v) {
      const double expected = (v < a ? 1.0 : -1.0) * (sp.vector[0] > 0 ? 1.0 : -1.0);
      CHECK(sp.vector[v] * expected > 0.0);
    }
  }
}
