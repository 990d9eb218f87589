#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "rothlab/composite.hpp"
#include "rothlab/exact.hpp"
#include "rothlab/matrix.hpp"
#include "rothlab/spectra.hpp"

namespace rothlab {

namespace tol {
/// Off-diagonal entries <= kZ count as nonpositive.
inline constexpr double kZ = 1e-10;
/// Inverse entries must exceed kInversePositive * max|entry|.
inline constexpr double kInversePositive = 1e-12;
/// A computed mu this close to an integer is tested exactly against it.
inline constexpr double kIntegerSnap = 1e-7;
}  // namespace tol

class RothError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RothReason { SignedEigenvector, ZeroEntry, MixedSigns, MultipleEigenvalue };
std::string_view to_string(RothReason r);

/// mu(H), replaced by an integer c when |mu - c| <= kIntegerSnap and c is an
/// eigenvalue of Q(H) in exact arithmetic.
struct ResolvedMu {
  double value = 0.0;
  bool exact = false;
};
ResolvedMu resolve_mu(const CompositeInstance& inst, double numeric_mu);

struct RothVerdict {
  bool is_s_roth = false;
  RothReason reason = RothReason::MixedSigns;
  double mu = 0.0;
  bool mu_exact = false;
  std::size_t multiplicity = 1;
  Vector eigenvector;  ///< T-first, sign-normalized
  bool s_positive = false;  ///< every S-entry > sign tolerance
  bool t_negative = false;  ///< every T-entry < -sign tolerance
};

/// Ground truth: decides S-Rothness from the smallest eigenpair of Q(H).
RothVerdict s_roth_oracle(const CompositeInstance& inst);
RothVerdict s_roth_verdict(const CompositeInstance& inst, const CompositeEigenpair& ep);

/// Q_mu = Q(G) + D1 + K (mu I - D2)^{-1} K^T, order t.
struct SchurMatrix {
  SymmetricMatrix q_mu;
  double mu = 0.0;
  std::optional<double> alpha;  ///< s / (t - mu) for a complete scaffold
};

/// Throws RothError unless mu < min(D2).
SchurMatrix build_q_mu(const CompositeInstance& inst, double mu);

/// [i ~_G j] - sum over common S-neighbours k of 1 / (d_B(k) - mu).
double q_mu_offdiagonal(const CompositeInstance& inst, double mu, Vertex i, Vertex j);

struct MatrixClassReport {
  bool z_matrix = false;
  bool positive_definite = false;
  bool m_matrix = false;
  bool irreducible = false;
  bool inverse_positive = false;
  bool minpositive = false;
  /// Inverse entries within the positivity threshold of zero (recorded, not judged).
  std::size_t near_zero_inverse_entries = 0;
  Matrix inverse;
};

/// Throws RothError if Q_mu is not positive definite.
MatrixClassReport classify_q_mu(const SchurMatrix& sm);

/// True iff the smallest eigenvalue is simple with a strictly one-signed eigenvector.
bool is_minpositive(const SymmetricMatrix& m);

struct HarmcondResult {
  bool holds = false;
  /// First failing pair (i < j, lexicographic), T-local indices.
  std::optional<std::pair<Vertex, Vertex>> witness;
  Rational witness_sum = 0;  ///< harmonic sum at the witness (0 if N_ij empty)
  bool witness_adjacent = false;
};

HarmcondResult harmcond_check(const CompositeInstance& inst);
bool gc_check(const CompositeInstance& inst);
bool bdeg_check(const CompositeInstance& inst);
bool st_check(const CompositeInstance& inst);

/// s / (t - mu); complete scaffold and mu < t required.
double alpha_of(const CompositeInstance& inst, double mu);

enum class GdegCase { A, B, None };
std::string_view to_string(GdegCase c);
/// None when the scaffold is not complete, t <= s, or neither case holds.
GdegCase gdeg_check(const CompositeInstance& inst);

struct SteveResult {
  bool applicable = false;
  bool s_roth = false;
  /// A joinee all of whose G-degrees equal t - s, when one exists.
  std::optional<VertexSet> witness;
};
SteveResult steve_characterization(const CompositeInstance& inst);

/// R_mu = Q(G) + (s - mu) I for a complete scaffold.
struct ReducedMatrix {
  SymmetricMatrix r_mu;
  double mu = 0.0;
  bool positive_definite = false;
  std::optional<double> gamma;  ///< 1^T R_mu^{-1} 1
  double beta = 0.0;            ///< 1 / (4 + s - mu)
  std::optional<Matrix> inverse;
};

/// Throws RothError if the scaffold is not complete.
ReducedMatrix build_r_mu(const CompositeInstance& inst, double mu);

struct RowsumResult {
  bool s_roth = false;
  Vector rowsums;
};

/// Throws RothError if R_mu is not positive definite.
RowsumResult r_mu_rowsum_check(const ReducedMatrix& rm);

/// w = -R_mu^{-1} J z
Vector w_from_z(const ReducedMatrix& rm, std::span<const double> z);

/// Throws RothError if m is not positive definite or order is out of [2, n).
bool gavrilov_check(const SymmetricMatrix& m, std::size_t order);

bool deg2_predicate(const CompositeInstance& inst);

}  // namespace rothlab
