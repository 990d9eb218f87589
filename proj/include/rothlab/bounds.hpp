#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rothlab/matrix.hpp"

namespace rothlab {

/// Bai-Golub bracket on Tr(A^{-1}) for symmetric positive definite A whose
/// spectrum lies in [a, b], a > 0. Throws LinalgError if a <= 0, a > b, or
/// the spectrum of A leaves [a, b].
std::pair<double, double> bai_golub_trace_bounds(const SymmetricMatrix& a, double lo, double hi);

/// Per-column bounds on |inv(j,i)| / inv(i,i), j != i, for a strictly
/// diagonally dominant matrix, with the ratios measured on the inverse.
struct DiagDominanceReport {
  Vector bounds;
  Vector observed;
};
/// Throws LinalgError unless a is strictly (row) diagonally dominant.
DiagDominanceReport diag_dominance_inverse_bound(const Matrix& a);

/// Q(C_k) + lambda I
SymmetricMatrix cycle_block(std::size_t k, double lambda);
/// Q(P_k) + lambda I
SymmetricMatrix path_block(std::size_t k, double lambda);

struct InverseBoundReport {
  double trace_lower = 0.0;
  double trace_upper = 0.0;
  double diag_bound = 0.0;     ///< (lambda+1) / (lambda (lambda+3))
  double offdiag_ratio = 0.0;  ///< 1 / (lambda+1)
  double observed_trace = 0.0;
  double observed_diag = 0.0;          ///< largest diagonal entry of the inverse
  double observed_diag_spread = 0.0;   ///< max - min diagonal entry
  double observed_offdiag_ratio = 0.0; ///< max |inv(i,j)| / inv(i,i), j != i
  double corner = 0.0;                 ///< inv(0, k-1)
};

/// Bounds on (Q(C_k) + lambda I)^{-1} against the directly computed inverse.
/// Throws LinalgError if lambda <= 0 or k < 3.
InverseBoundReport cycle_block_bounds(std::size_t k, double lambda);

/// Row sums of (Q(P_k) + (s - mu) I)^{-1}, once through the rank-one update
/// of the cycle block and once by direct inversion.
struct PathRowsumReport {
  Vector sherman_morrison;
  Vector direct;
  double d = 0.0;            ///< common diagonal of the cycle-block inverse
  double corner = 0.0;       ///< (1,k) entry of the cycle-block inverse
  double beta = 0.0;         ///< 1 / (4 + s - mu)
  double denominator = 0.0;  ///< 1 - 2 (d + corner)
  double max_discrepancy = 0.0;
};
/// Throws LinalgError if s - mu <= 0, k < 3, or the denominator vanishes.
PathRowsumReport path_block_rowsums(std::size_t k, double s, double mu);

/// One CSV row of a bound sweep: (k, lambda, bound, observed).
struct SweepRow {
  std::size_t k = 0;
  double lambda = 0.0;
  double bound = 0.0;
  double observed = 0.0;
  bool ok = false;
};

/// Diagonal and off-diagonal ratio checks, two rows per (k, lambda).
std::vector<SweepRow> cycle_sweep(const std::vector<std::size_t>& ks, const std::vector<double>& lambdas);
/// Minimum path-block row sum per k (bound column holds 0); ok iff positive
/// and the two routes agree to 1e-10.
std::vector<SweepRow> path_sweep(double s, double mu, const std::vector<std::size_t>& ks);
/// Bai-Golub upper bound vs. observed trace on random PD matrices of order k.
std::vector<SweepRow> bai_golub_sweep(std::size_t count, std::size_t max_order, std::uint64_t seed);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace rothlab
