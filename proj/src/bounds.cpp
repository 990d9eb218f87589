#include "rothlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <tuple>

#include "rothlab/rng.hpp"
#include "rothlab/spectra.hpp"

namespace rothlab {

namespace {

// [m1 n] [[m2, m1], [c^2, c]]^{-1} [n 1]^T at c = hi and c = lo; the 2x2
// system is singular exactly when every eigenvalue equals c, and then
// Tr(A^{-1}) = n / c.
std::pair<double, double> bai_golub_from_moments(const SymmetricMatrix& a, double lo, double hi) {
  const std::size_t n = a.order();
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m1 += a(i, i);
    for (std::size_t j = 0; j < n; ++j) m2 += a(i, j) * a(i, j);
  }
  const double nn = static_cast<double>(n);
  auto quadrature = [&](double c) {
    const double det = m2 * c - m1 * c * c;
    if (std::abs(det) <= 1e-13 * std::max(1.0, std::abs(m2 * c))) return nn / c;
    return (m1 * (c * nn - m1) + nn * (m2 - c * c * nn)) / det;
  };
  return {quadrature(hi), quadrature(lo)};
}

}  // namespace

std::pair<double, double> bai_golub_trace_bounds(const SymmetricMatrix& a, double lo, double hi) {
  if (!(lo > 0.0)) throw LinalgError("bai_golub: lower end of the bracket must be positive");
  if (lo > hi) throw LinalgError("bai_golub: empty bracket");
  const Vector ev = full_spectrum(a).eigenvalues;
  const double slack = 1e-10 * std::max(1.0, hi);
  if (ev.front() < lo - slack || ev.back() > hi + slack)
    throw LinalgError("bai_golub: spectrum is not contained in [a, b]");
  return bai_golub_from_moments(a, lo, hi);
}

DiagDominanceReport diag_dominance_inverse_bound(const Matrix& a) {
  const std::size_t n = a.rows();
  Vector offsum(n, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k)
      if (k != l) offsum[l] += std::abs(a(l, k));
    if (!(std::abs(a(l, l)) > offsum[l])) throw LinalgError("matrix is not strictly diagonally dominant");
  }

  DiagDominanceReport r;
  r.bounds.assign(n, 0.0);
  r.observed.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (l == i) continue;
      const double denom = std::abs(a(l, l)) - (offsum[l] - std::abs(a(l, i)));
      r.bounds[i] = std::max(r.bounds[i], std::abs(a(l, i)) / denom);
    }

  const Matrix inv = inverse_lu(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r.observed[i] = std::max(r.observed[i], std::abs(inv(j, i)) / std::abs(inv(i, i)));
  return r;
}

SymmetricMatrix cycle_block(std::size_t k, double lambda) {
  SymmetricMatrix m = signless_laplacian(Graph::cycle(k));
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, m(i, i) + lambda);
  return m;
}

SymmetricMatrix path_block(std::size_t k, double lambda) {
  SymmetricMatrix m = signless_laplacian(Graph::path(k));
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, m(i, i) + lambda);
  return m;
}

InverseBoundReport cycle_block_bounds(std::size_t k, double lambda) {
  if (!(lambda > 0.0)) throw LinalgError("cycle_block_bounds: lambda must be positive");
  if (k < 3) throw LinalgError("cycle_block_bounds: k must be at least 3");
  const SymmetricMatrix a = cycle_block(k, lambda);

  InverseBoundReport r;
  // spectrum is lambda + 2 + 2 cos(2 pi j / k), inside [lambda, lambda + 4]
  std::tie(r.trace_lower, r.trace_upper) = bai_golub_from_moments(a, lambda, lambda + 4.0);
  r.diag_bound = (lambda + 1.0) / (lambda * (lambda + 3.0));
  r.offdiag_ratio = 1.0 / (lambda + 1.0);

  const Matrix inv = inverse_spd(a.matrix());
  double lo = inv(0, 0), hi = inv(0, 0);
  for (std::size_t i = 0; i < k; ++i) {
    r.observed_trace += inv(i, i);
    lo = std::min(lo, inv(i, i));
    hi = std::max(hi, inv(i, i));
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) r.observed_offdiag_ratio = std::max(r.observed_offdiag_ratio, std::abs(inv(i, j)) / inv(i, i));
  }
  r.observed_diag = hi;
  r.observed_diag_spread = hi - lo;
  r.corner = inv(0, k - 1);
  return r;
}

PathRowsumReport path_block_rowsums(std::size_t k, double s, double mu) {
  const double lambda = s - mu;
  if (!(lambda > 0.0)) throw LinalgError("path_block_rowsums: s - mu must be positive");
  if (k < 3) throw LinalgError("path_block_rowsums: k must be at least 3");

  const Matrix cyc_inv = inverse_spd(cycle_block(k, lambda).matrix());
  PathRowsumReport r;
  r.d = cyc_inv(0, 0);
  r.corner = cyc_inv(0, k - 1);
  r.beta = 1.0 / (4.0 + lambda);
  r.denominator = 1.0 - 2.0 * (r.d + r.corner);
  if (std::abs(r.denominator) < 1e-14) throw LinalgError("path_block_rowsums: rank-one update is singular");

  r.sherman_morrison.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double numer = (i == 0 || i == k - 1) ? 2.0 * (r.d + r.corner)
                                                : 2.0 * (cyc_inv(i, 0) + cyc_inv(i, k - 1));
    r.sherman_morrison[i] = r.beta * (1.0 + numer / r.denominator);
  }

  r.direct = row_sums(inverse_lu(path_block(k, lambda).matrix()));
  for (std::size_t i = 0; i < k; ++i)
    r.max_discrepancy = std::max(r.max_discrepancy, std::abs(r.direct[i] - r.sherman_morrison[i]));
  return r;
}

std::vector<SweepRow> cycle_sweep(const std::vector<std::size_t>& ks, const std::vector<double>& lambdas) {
  const std::size_t cells = ks.size() * lambdas.size();
  std::vector<SweepRow> rows(2 * cells);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < cells; ++c) {
    const std::size_t k = ks[c / lambdas.size()];
    const double lambda = lambdas[c % lambdas.size()];
    const InverseBoundReport r = cycle_block_bounds(k, lambda);
    const double slack = 1e-12 * std::max(1.0, r.diag_bound);
    rows[2 * c] = {k, lambda, r.diag_bound, r.observed_diag, r.observed_diag <= r.diag_bound + slack};
    rows[2 * c + 1] = {k, lambda, r.offdiag_ratio, r.observed_offdiag_ratio,
                       r.observed_offdiag_ratio <= r.offdiag_ratio + 1e-12};
  }
  return rows;
}

std::vector<SweepRow> path_sweep(double s, double mu, const std::vector<std::size_t>& ks) {
  std::vector<SweepRow> rows(ks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < ks.size(); ++c) {
    const PathRowsumReport r = path_block_rowsums(ks[c], s, mu);
    const double least = *std::min_element(r.sherman_morrison.begin(), r.sherman_morrison.end());
    rows[c] = {ks[c], s - mu, 0.0, least, least > 0.0 && r.max_discrepancy <= 1e-10};
  }
  return rows;
}

namespace {

// V diag(ev) V^T with V orthonormalized from a Gaussian matrix.
SymmetricMatrix random_spd(std::size_t n, const Vector& ev, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i, j) = normal(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < j; ++p) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += v(i, j) * v(i, p);
        for (std::size_t i = 0; i < n; ++i) v(i, j) -= proj * v(i, p);
      }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += v(i, j) * v(i, j);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) v(i, j) /= nrm;
  }
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) a(i, j) += v(i, p) * ev[p] * v(j, p);
  return SymmetricMatrix(a, 1e-9);
}

}  // namespace

std::vector<SweepRow> bai_golub_sweep(std::size_t count, std::size_t max_order, std::uint64_t seed) {
  std::vector<SweepRow> rows(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < count; ++c) {
    Rng rng = split_rng(seed, c);
    const std::size_t n = 2 + rng() % (max_order - 1);
    std::uniform_real_distribution<double> lo_dist(0.05, 5.0), width(0.0, 20.0), unit(0.0, 1.0);
    const double lo = lo_dist(rng);
    const double hi = lo + width(rng);
    Vector ev(n);
    for (double& e : ev) e = lo + (hi - lo) * unit(rng);
    // pin the bracket ends half of the time
    if (c % 2 == 0) {
      ev.front() = lo;
      ev.back() = hi;
    }
    const SymmetricMatrix a = random_spd(n, ev, rng);
    const auto [lower, upper] = bai_golub_trace_bounds(a, lo, hi);
    double trace = 0.0;
    for (double e : ev) trace += 1.0 / e;
    const double slack = 1e-8 * trace;
    rows[c] = {n, lo, upper, trace, lower <= trace + slack && trace <= upper + slack};
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "k,lambda,bound,observed,ok\n";
  os.precision(12);
  for (const auto& r : rows) os << r.k << ',' << r.lambda << ',' << r.bound << ',' << r.observed << ',' << (r.ok ? 1 : 0) << '\n';
}

}  // namespace rothlab
