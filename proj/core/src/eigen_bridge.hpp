// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal glue between the row-major Matrix value type and Eigen.
// Not installed; nothing in include/ may depend on this header.

#ifndef SGINV_EIGEN_BRIDGE_HPP
#define SGINV_EIGEN_BRIDGE_HPP

#include <Eigen/Dense>

#include "sginv/matrix.hpp"

namespace sginv::detail {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const EigenRowMajor> as_eigen(const Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

inline Eigen::Map<EigenRowMajor> as_eigen(Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

template <typename Derived>
Matrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
  Matrix out(static_cast<std::size_t>(e.rows()),
             static_cast<std::size_t>(e.cols()));
  as_eigen(out) = e;
  return out;
}

}  // namespace sginv::detail

#endif  // SGINV_EIGEN_BRIDGE_HPP
