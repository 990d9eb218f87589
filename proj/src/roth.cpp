#include "rothlab/roth.hpp"

#include <algorithm>
#include <cmath>

namespace rothlab {

std::string_view to_string(RothReason r) {
  switch (r) {
    case RothReason::SignedEigenvector: return "SignedEigenvector";
    case RothReason::ZeroEntry: return "ZeroEntry";
    case RothReason::MixedSigns: return "MixedSigns";
    case RothReason::MultipleEigenvalue: return "MultipleEigenvalue";
  }
  return "?";
}

std::string_view to_string(GdegCase c) {
  switch (c) {
    case GdegCase::A: return "A";
    case GdegCase::B: return "B";
    case GdegCase::None: return "none";
  }
  return "?";
}

ResolvedMu resolve_mu(const CompositeInstance& inst, double numeric_mu) {
  const double nearest = std::round(numeric_mu);
  if (std::abs(numeric_mu - nearest) > tol::kIntegerSnap) return {numeric_mu, false};
  const auto c = static_cast<std::int64_t>(nearest);
  if (exact_kernel_dim(signless_laplacian(inst.h()), c) > 0) return {nearest, true};
  return {numeric_mu, false};
}

RothVerdict s_roth_verdict(const CompositeInstance& inst, const CompositeEigenpair& ep) {
  RothVerdict v;
  const ResolvedMu mu = resolve_mu(inst, ep.mu);
  v.mu = mu.value;
  v.mu_exact = mu.exact;
  v.multiplicity = ep.multiplicity;
  v.eigenvector = ep.vector;

  const double cut = tol::kSign * norm_inf(ep.vector);
  bool zero = false;
  v.s_positive = true;
  v.t_negative = true;
  for (double x : ep.z) {
    if (std::abs(x) <= cut) zero = true;
    if (!(x > cut)) v.s_positive = false;
  }
  for (double x : ep.w) {
    if (std::abs(x) <= cut) zero = true;
    if (!(x < -cut)) v.t_negative = false;
  }

  if (ep.multiplicity > 1) {
    v.reason = RothReason::MultipleEigenvalue;
  } else if (zero) {
    v.reason = RothReason::ZeroEntry;
  } else if (!v.s_positive || !v.t_negative) {
    v.reason = RothReason::MixedSigns;
  } else {
    v.reason = RothReason::SignedEigenvector;
  }
  v.is_s_roth = v.reason == RothReason::SignedEigenvector;
  return v;
}

RothVerdict s_roth_oracle(const CompositeInstance& inst) {
  return s_roth_verdict(inst, smallest_eigenpair(inst));
}

double q_mu_offdiagonal(const CompositeInstance& inst, double mu, Vertex i, Vertex j) {
  double v = inst.intra().has_edge(i, j) ? 1.0 : 0.0;
  for (std::size_t k : common_neighbors(inst, i, j))
    v -= 1.0 / (static_cast<double>(inst.d2()[k]) - mu);
  return v;
}

SchurMatrix build_q_mu(const CompositeInstance& inst, double mu) {
  const auto min_d2 = *std::min_element(inst.d2().begin(), inst.d2().end());
  if (!(mu < static_cast<double>(min_d2))) throw RothError("build_q_mu: mu must be below min(D2)");

  const std::size_t t = inst.t();
  const SymmetricMatrix q = signless_laplacian(inst.intra());
  SymmetricMatrix out(t);
  SchurMatrix sm{SymmetricMatrix{}, mu, std::nullopt};

  if (inst.complete_scaffold()) {
    // Q + sI - (s / (t - mu)) J
    const double alpha = static_cast<double>(inst.s()) / (static_cast<double>(t) - mu);
    sm.alpha = alpha;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i; j < t; ++j)
        out.set(i, j, q(i, j) + (i == j ? static_cast<double>(inst.s()) : 0.0) - alpha);
  } else {
    for (std::size_t i = 0; i < t; ++i) {
      double diag = q(i, i) + static_cast<double>(inst.d1()[i]);
      for (std::size_t k = 0; k < inst.s(); ++k)
        if (inst.k()(i, k)) diag -= 1.0 / (static_cast<double>(inst.d2()[k]) - mu);
      out.set(i, i, diag);
      for (std::size_t j = i + 1; j < t; ++j) out.set(i, j, q_mu_offdiagonal(inst, mu, i, j));
    }
  }
  sm.q_mu = std::move(out);
  return sm;
}

bool is_minpositive(const SymmetricMatrix& m) {
  const SmallestEigenpair ep = smallest_eigenpair(m);
  if (ep.multiplicity != 1) return false;
  const double cut = tol::kSign * norm_inf(ep.vector);
  const bool pos = std::all_of(ep.vector.begin(), ep.vector.end(), [&](double x) { return x > cut; });
  const bool neg = std::all_of(ep.vector.begin(), ep.vector.end(), [&](double x) { return x < -cut; });
  return pos || neg;
}

MatrixClassReport classify_q_mu(const SchurMatrix& sm) {
  const Matrix& m = sm.q_mu.matrix();
  const std::size_t n = m.rows();
  MatrixClassReport r;

  r.z_matrix = true;
  Graph pattern(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) > tol::kZ) r.z_matrix = false;
      if (std::abs(m(i, j)) > tol::kZ) pattern.add_edge(i, j);
    }
  r.irreducible = is_connected(pattern);

  auto chol = Cholesky::factor(m);
  if (!chol) throw RothError("classify_q_mu: Q_mu is singular or indefinite");
  r.positive_definite = true;
  r.m_matrix = r.z_matrix && r.positive_definite;

  r.inverse = chol->inverse();
  double biggest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (double v : r.inverse.row(i)) biggest = std::max(biggest, std::abs(v));
  const double floor = tol::kInversePositive * biggest;
  r.inverse_positive = true;
  for (std::size_t i = 0; i < n; ++i)
    for (double v : r.inverse.row(i)) {
      if (!(v > floor)) r.inverse_positive = false;
      if (std::abs(v) <= floor) ++r.near_zero_inverse_entries;
    }

  r.minpositive = is_minpositive(sm.q_mu);
  return r;
}

namespace {

bool harmonic_sum_at_least_one(const CompositeInstance& inst, const VertexSet& common, Rational& sum) {
  sum = 0;
  for (std::size_t k : common) sum += Rational(1, static_cast<long long>(inst.d2()[k]));
  return sum >= 1;
}

}  // namespace

HarmcondResult harmcond_check(const CompositeInstance& inst) {
  HarmcondResult r;
  r.holds = true;
  for (Vertex i = 0; i < inst.t() && r.holds; ++i) {
    for (Vertex j = i + 1; j < inst.t(); ++j) {
      const VertexSet common = common_neighbors(inst, i, j);
      const bool adjacent = inst.intra().has_edge(i, j);
      Rational sum = 0;
      const bool ok = adjacent ? harmonic_sum_at_least_one(inst, common, sum) : !common.empty();
      if (!ok) {
        r.holds = false;
        r.witness = {i, j};
        r.witness_sum = sum;
        r.witness_adjacent = adjacent;
        break;
      }
    }
  }
  return r;
}

bool gc_check(const CompositeInstance& inst) {
  const std::size_t cb = *std::max_element(inst.d2().begin(), inst.d2().end());
  for (Vertex i = 0; i < inst.t(); ++i)
    for (Vertex j = i + 1; j < inst.t(); ++j) {
      const std::size_t common = common_neighbors(inst, i, j).size();
      if (inst.intra().has_edge(i, j) ? common < cb : common == 0) return false;
    }
  return true;
}

bool bdeg_check(const CompositeInstance& inst) {
  const std::size_t target = inst.t() + inst.s();
  return std::all_of(inst.d1().begin(), inst.d1().end(), [&](std::size_t d) { return 2 * d >= target; });
}

bool st_check(const CompositeInstance& inst) { return inst.complete_scaffold() && inst.s() >= inst.t(); }

double alpha_of(const CompositeInstance& inst, double mu) {
  if (!inst.complete_scaffold()) throw RothError("alpha_of: scaffold is not complete");
  if (!(mu < static_cast<double>(inst.t()))) throw RothError("alpha_of: mu must be below t");
  return static_cast<double>(inst.s()) / (static_cast<double>(inst.t()) - mu);
}

GdegCase gdeg_check(const CompositeInstance& inst) {
  if (!inst.complete_scaffold() || inst.t() <= inst.s()) return GdegCase::None;
  const std::size_t gap = inst.t() - inst.s();
  const std::size_t delta = inst.intra().min_degree();
  if (delta > gap) return GdegCase::A;
  if (delta == gap && is_connected(complement(inst.intra()))) return GdegCase::B;
  return GdegCase::None;
}

SteveResult steve_characterization(const CompositeInstance& inst) {
  SteveResult r;
  if (!inst.complete_scaffold() || inst.t() <= inst.s()) return r;
  const Graph& g = inst.intra();
  const std::size_t gap = inst.t() - inst.s();
  if (g.min_degree() != gap) return r;
  const auto joinees = join_decomposition(g);
  if (joinees.size() < 2) return r;

  r.applicable = true;
  r.s_roth = true;
  for (const auto& part : joinees) {
    const bool has_high = std::any_of(part.begin(), part.end(), [&](Vertex v) { return g.degree(v) > gap; });
    if (!has_high) {
      r.s_roth = false;
      r.witness = part;
      break;
    }
  }
  return r;
}

ReducedMatrix build_r_mu(const CompositeInstance& inst, double mu) {
  if (!inst.complete_scaffold()) throw RothError("build_r_mu: scaffold is not complete");
  const std::size_t t = inst.t();
  const double shift = static_cast<double>(inst.s()) - mu;
  SymmetricMatrix r = signless_laplacian(inst.intra());
  for (std::size_t i = 0; i < t; ++i) r.set(i, i, r(i, i) + shift);

  ReducedMatrix rm{r, mu, false, std::nullopt, 1.0 / (4.0 + shift), std::nullopt};
  if (auto chol = Cholesky::factor(r.matrix(), 1e-12)) {
    rm.positive_definite = true;
    rm.inverse = chol->inverse();
    double gamma = 0.0;
    for (double v : row_sums(*rm.inverse)) gamma += v;
    rm.gamma = gamma;
  }
  return rm;
}

RowsumResult r_mu_rowsum_check(const ReducedMatrix& rm) {
  if (!rm.positive_definite) throw RothError("r_mu_rowsum_check: R_mu is not positive definite");
  RowsumResult r;
  r.rowsums = row_sums(*rm.inverse);
  const double cut = tol::kSign * norm_inf(r.rowsums);
  r.s_roth = std::all_of(r.rowsums.begin(), r.rowsums.end(), [&](double v) { return v > cut; });
  return r;
}

Vector w_from_z(const ReducedMatrix& rm, std::span<const double> z) {
  if (!rm.positive_definite) throw RothError("w_from_z: R_mu is not positive definite");
  double sigma = 0.0;
  for (double v : z) sigma += v;
  Vector w = row_sums(*rm.inverse);
  for (double& v : w) v *= -sigma;
  return w;
}

bool gavrilov_check(const SymmetricMatrix& m, std::size_t order) {
  const std::size_t n = m.order();
  if (order < 2 || order >= n) throw RothError("gavrilov_check: order must lie in [2, n)");
  if (!is_positive_definite(m.matrix())) throw RothError("gavrilov_check: matrix is not positive definite");

  std::vector<std::size_t> idx(order);
  for (std::size_t i = 0; i < order; ++i) idx[i] = i;
  while (true) {
    const Matrix inv = inverse_spd(principal_submatrix(m.matrix(), idx));
    double biggest = 0.0;
    for (std::size_t i = 0; i < order; ++i)
      for (double v : inv.row(i)) biggest = std::max(biggest, std::abs(v));
    for (std::size_t i = 0; i < order; ++i)
      for (double v : inv.row(i))
        if (v < -tol::kInversePositive * biggest) return false;

    // next combination
    std::size_t pos = order;
    while (pos > 0 && idx[pos - 1] == n - order + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < order; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

bool deg2_predicate(const CompositeInstance& inst) {
  return inst.complete_scaffold() && inst.t() > inst.s() && inst.s() >= 6 && inst.intra().max_degree() <= 2;
}

}  // namespace rothlab
