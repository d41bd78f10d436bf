// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_DRS_HPP
#define SGINV_DRS_HPP

#include <optional>
#include <utility>

#include "sginv/projection.hpp"
#include "sginv/solve_types.hpp"

namespace sginv {

/// Douglas-Rachford splitting for min ||H||_1 over the affine set of a
/// ProjectionContext. Defaults follow the stop rule: the residual rule uses
/// eps 1e-5, the cheaper fixed-point rule 1e-6.
struct DrsConfig {
  double lambda = 1.0;
  double eps_abs = 1e-6;
  double eps_rel = 1e-6;
  std::size_t max_iter = 200000;
  double time_limit_seconds = 300.0;
  StopRule stop = StopRule::fixed_point();
  std::size_t trace_stride = 50;

  static DrsConfig fixed_point();
  static DrsConfig residual();
  static DrsConfig target_one_norm(double target, double rel_factor = 1e-5);
};

/// Entrywise shrinkage: a-k if a>k, 0 if |a|<=k, a+k if a<-k. This is the
/// prox of kappa*|.| applied per entry.
Matrix soft_threshold(const Matrix& v, double kappa);

/// Runs the four-step scheme from V0 = A+:
///   H^{k+1/2} = S_lambda(V^k)
///   V^{k+1/2} = 2 H^{k+1/2} - V^k
///   H^{k+1}   = Pi_C(V^{k+1/2})
///   V^{k+1}   = V^k + H^{k+1} - H^{k+1/2}
/// Residuals are evaluated per iteration only under the Residual rule.
SolveReport drs_solve(const ProjectionContext& ctx, const DrsConfig& cfg,
                      const TraceSink* trace = nullptr);

/// Frobenius norms of the primal and dual residual matrices of the context's
/// problem, evaluated at H^{k+1/2} = h_half and V^k = v_prev.
std::pair<double, double> drs_residuals(const ProjectionContext& ctx,
                                        const Matrix& h_half,
                                        const Matrix& v_prev, double lambda);

/// Closed-form dual estimates (least-squares solutions for the multipliers).
/// gamma is present for P123 and P134 only.
struct DrsDualCertificates {
  Matrix lambda;
  std::optional<Matrix> gamma;
};

DrsDualCertificates drs_dual_certificates(const ProjectionContext& ctx,
                                          const Matrix& h_half,
                                          const Matrix& v_prev, double lambda);

}  // namespace sginv

#endif  // SGINV_DRS_HPP
