#include "rothlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rothlab {

SymmetricMatrix signless_laplacian(const Graph& g) {
  SymmetricMatrix q(g.order());
  for (Vertex v = 0; v < g.order(); ++v) q.set(v, v, static_cast<double>(g.degree(v)));
  for (const auto& [u, v] : g.edges()) q.set(u, v, 1.0);
  return q;
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, static_cast<double>(g.degree(v)));
  for (const auto& [u, v] : g.edges()) l.set(u, v, -1.0);
  return l;
}

namespace {

constexpr int kMaxSweeps = 100;

// One Jacobi rotation zeroing a(p,q); a is kept full and symmetric.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem full_spectrum(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (double x : a.row(i)) frob += x * x;
  frob = std::sqrt(frob);

  bool converged = n <= 1 || frob == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * frob) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // negligible against both diagonal entries: drop it
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged) throw EigenError("Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) es.eigenvectors(i, k) = v(i, order[k]);
  }

  const Matrix& orig = m.matrix();
  for (std::size_t k = 0; k < n; ++k) {
    Vector x = es.eigenvector(k);
    Vector ax = orig * x;
    for (std::size_t i = 0; i < n; ++i)
      es.residual_bound = std::max(es.residual_bound, std::abs(ax[i] - es.eigenvalues[k] * x[i]));
  }
  if (es.residual_bound > tol::kEig * (1.0 + inf_norm(orig)))
    throw EigenError("Jacobi eigensolver residual exceeds tolerance");
  return es;
}

SmallestEigenpair smallest_eigenpair(const EigenSystem& es) {
  if (es.eigenvalues.empty()) throw EigenError("empty matrix");
  SmallestEigenpair sp;
  sp.mu = es.eigenvalues.front();
  sp.vector = es.eigenvector(0);
  const double cluster = tol::kCluster * (1.0 + std::abs(sp.mu));
  sp.multiplicity = static_cast<std::size_t>(std::count_if(
      es.eigenvalues.begin(), es.eigenvalues.end(), [&](double l) { return l - sp.mu <= cluster; }));
  return sp;
}

SmallestEigenpair smallest_eigenpair(const SymmetricMatrix& m) {
  return smallest_eigenpair(full_spectrum(m));
}

CompositeEigenpair smallest_eigenpair(const CompositeInstance& inst) {
  CompositeEigenpair cp;
  static_cast<SmallestEigenpair&>(cp) = smallest_eigenpair(signless_laplacian(inst.h()));
  const std::size_t t = inst.t();
  double s_sum = 0.0;
  for (std::size_t j = 0; j < inst.s(); ++j) s_sum += cp.vector[t + j];
  if (s_sum < 0.0)
    for (double& x : cp.vector) x = -x;
  cp.w.assign(cp.vector.begin(), cp.vector.begin() + static_cast<std::ptrdiff_t>(t));
  cp.z.assign(cp.vector.begin() + static_cast<std::ptrdiff_t>(t), cp.vector.end());
  return cp;
}

double largest_eigenvalue(const SymmetricMatrix& m) {
  if (m.order() == 0) return 0.0;
  return full_spectrum(m).eigenvalues.back();
}

double rayleigh_quotient_signless(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) throw LinalgError("vector length does not match graph order");
  const double xx = dot(x, x);
  if (xx == 0.0) throw LinalgError("Rayleigh quotient of the zero vector");
  double num = 0.0;
  for (const auto& [u, v] : g.edges()) num += (x[u] + x[v]) * (x[u] + x[v]);
  return num / xx;
}

double mu_upper_bound_cut(const CompositeInstance& inst) {
  return 4.0 * static_cast<double>(inst.intra().size()) / static_cast<double>(inst.s() + inst.t());
}

double mu_lower_bound_degrees(const Graph& g) {
  return 2.0 * static_cast<double>(g.min_degree()) - largest_eigenvalue(laplacian(g));
}

}  // namespace rothlab
