#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rothlab {

using Vector = std::vector<double>;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);
Vector operator*(const Matrix& a, std::span<const double> x);
Matrix transpose(const Matrix& a);

double inf_norm(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
Vector row_sums(const Matrix& a);
Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> idx);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm_inf(std::span<const double> a);

/// Real symmetric matrix. Construction checks symmetry and mirrors the upper
/// triangle, so entries(i,j) == entries(j,i) bit-for-bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : m_(n, n) {}
  /// Throws LinalgError if `m` is not square or deviates from symmetry by
  /// more than tol * (1 + max|m_ij|).
  explicit SymmetricMatrix(Matrix m, double tol = 1e-12);

  std::size_t order() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v);
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// A = L L^T for symmetric positive definite A.
class Cholesky {
 public:
  /// std::nullopt if a pivot is <= pivot_tol * max diagonal.
  static std::optional<Cholesky> factor(const Matrix& a, double pivot_tol = 1e-14);

  Vector solve(std::span<const double> b) const;
  Matrix inverse() const;

 private:
  explicit Cholesky(Matrix l) : l_(std::move(l)) {}
  Matrix l_;
};

/// Inverse of a symmetric positive definite matrix; throws if not PD.
Matrix inverse_spd(const Matrix& a);

/// Inverse by partially pivoted LU; throws on (numerical) singularity.
Matrix inverse_lu(const Matrix& a);

bool is_positive_definite(const Matrix& a);

}  // namespace rothlab
