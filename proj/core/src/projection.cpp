// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include "sginv/projection.hpp"

#include <stdexcept>

#include "eigen_bridge.hpp"

namespace sginv {

ProjectionContext::ProjectionContext(const Matrix& a, const Svd& svd,
                                     ProblemKind problem)
    : a_(a), problem_(problem) {
  if (svd.m != a.rows() || svd.n != a.cols()) {
    throw std::invalid_argument("ProjectionContext: SVD does not match A");
  }
  pinv_ = pseudoinverse(svd);
  proj_col_ = matmul(pinv_, a_);   // A+A
  proj_row_ = matmul(a_, pinv_);   // AA+
  null_col_ = Matrix::identity(a.cols()) - proj_col_;
}

Matrix ProjectionContext::project(const Matrix& v) const {
  if (v.rows() != n() || v.cols() != m()) {
    throw std::invalid_argument("project: V must be n x m");
  }
  const auto ve = detail::as_eigen(v);
  const auto pinv = detail::as_eigen(pinv_);
  const auto ncol = detail::as_eigen(null_col_);
  const auto prow = detail::as_eigen(proj_row_);

  Matrix out(n(), m());
  auto oe = detail::as_eigen(out);
  switch (problem_) {
    case ProblemKind::P13:
      // v - A+Av + A+ = (I - A+A)v + A+
      oe.noalias() = ncol * ve;
      oe += pinv;
      break;
    case ProblemKind::P123:
      // A+ - A+AvAA+ + vAA+ = (I - A+A)vAA+ + A+
      oe.noalias() = ncol * (ve * prow);
      oe += pinv;
      break;
    case ProblemKind::P134: {
      // v - A+Av + A+ - vAA+ + A+AvAA+ = (I - A+A)v(I - AA+) + A+
      const Eigen::MatrixXd left = ncol * ve;
      oe.noalias() = left - left * prow;
      oe += pinv;
      break;
    }
  }
  return out;
}

bool ProjectionContext::is_feasible(const Matrix& h, double tol) const {
  const auto ae = detail::as_eigen(a_);
  const auto he = detail::as_eigen(h);
  const Eigen::MatrixXd at = ae.transpose();
  const double pls = (at * (ae * he) - at).norm();
  if (pls > tol) return false;
  switch (problem_) {
    case ProblemKind::P13:
      return true;
    case ProblemKind::P123:
      return (he * detail::as_eigen(proj_row_) - he).norm() <= tol;
    case ProblemKind::P134:
      return (he * (ae * at) - at).norm() <= tol;
  }
  return false;
}

}  // namespace sginv
