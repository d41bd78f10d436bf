// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include "sginv/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"

namespace sginv {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: entry count " +
                                std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("Matrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::diagonal(std::span<const double> d, std::size_t rows,
                        std::size_t cols) {
  if (d.size() > std::min(rows, cols)) {
    throw std::invalid_argument("Matrix::diagonal: too many diagonal entries");
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

bool Matrix::all_finite() const {
  for (double v : entries_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        "matmul: inner dimensions differ (" + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()) + ")");
  }
  Matrix out(a.rows(), b.cols());
  detail::as_eigen(out).noalias() = detail::as_eigen(a) * detail::as_eigen(b);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  detail::as_eigen(out) = detail::as_eigen(a).transpose();
  return out;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator+");
  Matrix out(a.rows(), a.cols());
  detail::as_eigen(out) = detail::as_eigen(a) + detail::as_eigen(b);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator-");
  Matrix out(a.rows(), a.cols());
  detail::as_eigen(out) = detail::as_eigen(a) - detail::as_eigen(b);
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  detail::as_eigen(out) = s * detail::as_eigen(a);
  return out;
}

Matrix operator-(const Matrix& a) { return -1.0 * a; }

double frobenius_norm(const Matrix& a) {
  return detail::as_eigen(a).norm();
}

double one_norm(const Matrix& a) {
  double sum = 0.0;
  for (double v : a.entries()) sum += std::abs(v);
  return sum;
}

double inf_norm_entrywise(const Matrix& a) {
  double best = 0.0;
  for (double v : a.entries()) best = std::max(best, std::abs(v));
  return best;
}

std::size_t zero_norm(const Matrix& a, double zero_tol) {
  if (!(zero_tol > 0.0)) {
    throw std::invalid_argument("zero_norm: zero_tol must be positive");
  }
  std::size_t count = 0;
  for (double v : a.entries()) {
    if (std::abs(v) > zero_tol) ++count;
  }
  return count;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

}  // namespace sginv
