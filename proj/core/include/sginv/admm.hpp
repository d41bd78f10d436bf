// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_ADMM_HPP
#define SGINV_ADMM_HPP

#include <utility>

#include "sginv/problem.hpp"
#include "sginv/solve_types.hpp"
#include "sginv/svd.hpp"

namespace sginv {

/// Scaled-form ADMM on the structural reformulation with one free Gamma
/// block: Z ((n-r) x r) for P123, W ((n-r) x (m-r)) for P134. There is no
/// ADMM for P13, which would need both blocks.
struct AdmmConfig {
  double rho = 1.0;
  double eps_abs = 1e-5;
  double eps_rel = 1e-5;
  std::size_t max_iter = 200000;
  double time_limit_seconds = 300.0;
  StopRule stop = StopRule::residual();  // Residual or TargetOneNorm
  std::size_t trace_stride = 50;
};

struct AdmmState {
  Matrix free_block;     // Z^k or W^k
  Matrix h;              // H^k (n x m)
  Matrix lambda_scaled;  // Lambda^k = Theta^k / rho (n x m)
};

/// Theta-hat = V1 U1^T / ||V1 U1^T||_inf (dual feasible by orthogonality),
/// Lambda^0 = Theta-hat / rho, H^0 = A+ + Lambda^0. From this start the first
/// block update gives a zero free block, i.e. the Frobenius-minimal member.
AdmmState admm_init(const Svd& svd, ProblemKind problem, double rho);

/// Frobenius norms of the primal residual r = A+ + V2*B*Ub^T - H and the
/// dual residual s = rho * V2^T (H - H_prev) Ub, where (B, Ub) is (Z, U1)
/// for P123 and (W, U2) for P134.
std::pair<double, double> admm_residuals(const AdmmState& state,
                                         const AdmmState& state_prev,
                                         const Svd& svd, ProblemKind problem,
                                         double rho);

/// report.h is the structural reconstruction A+ + V2*B*Ub^T of the final
/// block, feasible for the problem whatever the termination status.
SolveReport admm_solve(const Svd& svd, ProblemKind problem,
                       const AdmmConfig& cfg, const TraceSink* trace = nullptr);

}  // namespace sginv

#endif  // SGINV_ADMM_HPP
