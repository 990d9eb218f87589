#pragma once

#include <cstddef>
#include <stdexcept>

#include "rothlab/composite.hpp"
#include "rothlab/graph.hpp"
#include "rothlab/matrix.hpp"

namespace rothlab {

namespace tol {
/// Relative residual accepted from the eigensolver.
inline constexpr double kEig = 1e-10;
/// Eigenvalues within kCluster * (1 + |lambda_1|) of lambda_1 count as equal.
inline constexpr double kCluster = 1e-7;
/// Eigenvector entries within kSign * ||x||_inf of zero count as zero.
inline constexpr double kSign = 1e-7;
}  // namespace tol

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Q(G) = D(G) + A(G)
SymmetricMatrix signless_laplacian(const Graph& g);
/// L(G) = D(G) - A(G)
SymmetricMatrix laplacian(const Graph& g);

struct EigenSystem {
  Vector eigenvalues;  ///< nondecreasing
  Matrix eigenvectors; ///< column k belongs to eigenvalues[k]
  double residual_bound = 0.0;

  Vector eigenvector(std::size_t k) const { return eigenvectors.column(k); }
};

/// Full eigendecomposition by cyclic Jacobi rotations. Throws EigenError if
/// the sweeps do not converge or the residual contract is violated.
EigenSystem full_spectrum(const SymmetricMatrix& m);

struct SmallestEigenpair {
  double mu = 0.0;
  Vector vector;  ///< unit norm
  std::size_t multiplicity = 1;
};

SmallestEigenpair smallest_eigenpair(const SymmetricMatrix& m);
SmallestEigenpair smallest_eigenpair(const EigenSystem& es);

/// Smallest eigenpair of Q(H), sign-normalized so that the S-entries sum to
/// a nonnegative value, with its T and S restrictions.
struct CompositeEigenpair : SmallestEigenpair {
  Vector w;  ///< x(T)
  Vector z;  ///< x(S)
};

CompositeEigenpair smallest_eigenpair(const CompositeInstance& inst);

double largest_eigenvalue(const SymmetricMatrix& m);

/// sum over edges of (x_i + x_j)^2 divided by x^T x. Throws on x == 0.
double rayleigh_quotient_signless(const Graph& g, std::span<const double> x);

/// 4e / (s + t) with e = |E(G)|; an upper bound on mu(H).
double mu_upper_bound_cut(const CompositeInstance& inst);

/// 2 delta(G) - lambda_max(L(G)); a lower bound on mu(G).
double mu_lower_bound_degrees(const Graph& g);

}  // namespace rothlab
