// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_PROJECTION_HPP
#define SGINV_PROJECTION_HPP

#include "sginv/matrix.hpp"
#include "sginv/problem.hpp"
#include "sginv/svd.hpp"

namespace sginv {

/// Frozen per-instance data for projecting onto the affine feasible set of a
/// problem kind:
///   P13 :  C = {H : A^T A H = A^T}
///   P123:  C = {H : A^T A H = A^T, H A A+ = H}
///   P134:  C = {H : A^T A H = A^T, H A A^T = A^T}
/// A+, A+A and AA+ are computed once; every projection is then a fixed linear
/// map plus a constant, so an iteration never solves a linear system.
class ProjectionContext {
 public:
  ProjectionContext(const Matrix& a, const Svd& svd, ProblemKind problem);

  const Matrix& a() const { return a_; }
  const Matrix& a_dagger() const { return pinv_; }
  /// A+A, the n x n orthogonal projector onto range(A^T).
  const Matrix& col_projector() const { return proj_col_; }
  /// AA+, the m x m orthogonal projector onto range(A).
  const Matrix& row_projector() const { return proj_row_; }
  ProblemKind problem() const { return problem_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }

  /// Frobenius-orthogonal projection of v (n x m) onto C:
  ///   P13 :  v - A+Av + A+
  ///   P123:  A+ - A+AvAA+ + vAA+
  ///   P134:  v - A+Av + A+ - vAA+ + A+AvAA+
  Matrix project(const Matrix& v) const;

  /// Residuals of the defining equations of C all within tol.
  bool is_feasible(const Matrix& h, double tol) const;

 private:
  Matrix a_, pinv_, proj_col_, proj_row_;
  Matrix null_col_;  // I - A+A
  ProblemKind problem_;
};

}  // namespace sginv

#endif  // SGINV_PROJECTION_HPP
