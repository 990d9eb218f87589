#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rothlab/matrix.hpp"

namespace rothlab {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

struct ExactKernel {
  std::size_t nullity = 0;
  /// Basis of ker(M - cI), one vector per free column of the reduced row
  /// echelon form (that column's entry is 1).
  std::vector<RationalVector> basis;
};

/// Kernel of (m - cI) over the rationals. Throws LinalgError if an entry of m
/// is not an integer.
ExactKernel exact_kernel(const SymmetricMatrix& m, std::int64_t c);

inline std::size_t exact_kernel_dim(const SymmetricMatrix& m, std::int64_t c) {
  return exact_kernel(m, c).nullity;
}

/// True iff m x == c x holds exactly for an integer matrix and integer x.
bool exact_eigenvector_check(const SymmetricMatrix& m, std::span<const std::int64_t> x,
                             std::int64_t c);

}  // namespace rothlab
