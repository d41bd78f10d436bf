// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_MATRIX_HPP
#define SGINV_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sginv {

/// Dense real matrix, row-major storage. Immutable in spirit: solvers treat
/// matrices as values and build new ones instead of mutating shared state.
class Matrix {
 public:
  Matrix() = default;

  /// rows x cols, zero-filled.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `entries` (row-major, length rows*cols).
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  /// Row-of-rows literal, e.g. Matrix({{1, 2}, {3, 4}}).
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  /// rows x cols matrix with `d` on the leading diagonal, zero elsewhere.
  static Matrix diagonal(std::span<const double> d, std::size_t rows,
                         std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const double> entries() const { return entries_; }
  double* data() { return entries_.data(); }
  const double* data() const { return entries_.data(); }

  /// True when no entry is NaN or infinite.
  bool all_finite() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// Standard product; throws std::invalid_argument on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator-(const Matrix& a);

double frobenius_norm(const Matrix& a);

/// Vector 1-norm of the flattened matrix: sum of absolute entries.
double one_norm(const Matrix& a);

/// Largest absolute entry.
double inf_norm_entrywise(const Matrix& a);

/// Number of entries with |entry| > zero_tol. Requires zero_tol > 0.
std::size_t zero_norm(const Matrix& a, double zero_tol);

/// Entry-count tolerance used throughout the experiment tables.
inline constexpr double kNonzeroTolerance = 1e-5;

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace sginv

#endif  // SGINV_MATRIX_HPP
