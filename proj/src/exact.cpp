#include "rothlab/exact.hpp"

#include <cmath>

namespace rothlab {

namespace {

std::int64_t as_integer(double v) {
  const double r = std::round(v);
  if (r != v || std::abs(r) > 9e15) throw LinalgError("exact arithmetic needs integer entries");
  return static_cast<std::int64_t>(r);
}

}  // namespace

ExactKernel exact_kernel(const SymmetricMatrix& m, std::int64_t c) {
  const std::size_t n = m.order();
  std::vector<RationalVector> a(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(as_integer(m(i, j)) - (i == j ? c : 0));

  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    const Rational p = a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  ExactKernel k;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t pc : pivot_cols) is_pivot[pc] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
    k.basis.push_back(std::move(v));
  }
  k.nullity = k.basis.size();
  return k;
}

bool exact_eigenvector_check(const SymmetricMatrix& m, std::span<const std::int64_t> x,
                             std::int64_t c) {
  const std::size_t n = m.order();
  if (x.size() != n) throw LinalgError("vector length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    boost::multiprecision::cpp_int acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += boost::multiprecision::cpp_int(as_integer(m(i, j))) * x[j];
    if (acc != boost::multiprecision::cpp_int(c) * x[i]) return false;
  }
  return true;
}

}  // namespace rothlab
