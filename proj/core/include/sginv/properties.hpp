// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_PROPERTIES_HPP
#define SGINV_PROPERTIES_HPP

#include <cstddef>

#include "sginv/matrix.hpp"
#include "sginv/problem.hpp"

namespace sginv {

/// Frobenius residuals of the four Moore-Penrose properties and of the single
/// matrix equations equivalent to the property bundles:
///   pls  : A^T A H = A^T                 (P1+P3)
///   plsr : A^T H^T A^T + H A A+ = A^T + H  (P1+P2+P3)
///   pmn  : A A^T H^T = A                 (P1+P4)
///   pmx  : A A^T H^T + H^T A^T A = 2A    (P1+P3+P4)
struct PropertyResiduals {
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0;
  double pls = 0, plsr = 0, pmn = 0, pmx = 0;
};

PropertyResiduals residuals(const Matrix& a, const Matrix& a_dagger,
                            const Matrix& h);

/// True when the problem's single-equation residual is within tol
/// (pls for P13, plsr for P123, pmx for P134).
bool satisfies(ProblemKind problem, const PropertyResiduals& res, double tol);

/// Nonzero-count upper bounds for extreme solutions of the standard
/// linear-programming reformulations of the three families.
struct SparsityBounds {
  std::size_t beta13 = 0;   // m*r
  std::size_t beta123 = 0;  // m*r + (m-r)*(n-r)
  std::size_t beta134 = 0;  // m*n - (m-r)*(n-r)
};

SparsityBounds bounds(std::size_t m, std::size_t n, std::size_t r);

std::size_t bound_for(ProblemKind problem, const SparsityBounds& b);

/// Rank of (I_m (x) A^T A) + (A A^T (x) I_n), computed by counting singular
/// value pairs with sigma_i^2 + sigma_j^2 > 0; equals mn - (m-r)(n-r).
std::size_t kron_system_rank(const Matrix& a);

/// Relative change (x - baseline) / baseline used for the table statistics.
double factor(double x, double baseline);

}  // namespace sginv

#endif  // SGINV_PROPERTIES_HPP
