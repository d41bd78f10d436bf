// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_SOLVE_TYPES_HPP
#define SGINV_SOLVE_TYPES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "sginv/matrix.hpp"

namespace sginv {

enum class SolveStatus { Converged, IterLimit, TimeLimit, TargetReached };

constexpr std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::IterLimit: return "iter_limit";
    case SolveStatus::TimeLimit: return "time_limit";
    case SolveStatus::TargetReached: return "target_reached";
  }
  return "?";
}

/// Termination rule shared by the DRS and ADMM drivers.
///   Residual     -- primal/dual residual thresholds
///   FixedPoint   -- displacement of the DRS fixed-point iterate (DRS only)
///   TargetOneNorm-- stop once the feasible iterate's 1-norm is within
///                   rel_factor of a given target (the cross-method
///                   comparison protocol)
struct StopRule {
  enum class Kind { Residual, FixedPoint, TargetOneNorm };
  Kind kind = Kind::FixedPoint;
  double target = 0.0;
  double rel_factor = 1e-5;

  static StopRule residual() { return {Kind::Residual, 0.0, 0.0}; }
  static StopRule fixed_point() { return {Kind::FixedPoint, 0.0, 0.0}; }
  static StopRule target_one_norm(double target, double rel_factor = 1e-5) {
    return {Kind::TargetOneNorm, target, rel_factor};
  }
};

/// Outcome of a solve. h is always feasible for the problem, whatever the
/// status: both solvers emit a projected / structurally reconstructed iterate.
struct SolveReport {
  Matrix h;
  std::size_t iterations = 0;
  double elapsed_seconds = 0.0;
  double one_norm = 0.0;
  std::size_t zero_norm = 0;
  double final_primal_residual = 0.0;
  double final_dual_residual = 0.0;
  SolveStatus status = SolveStatus::IterLimit;
};

struct TracePoint {
  std::size_t iter = 0;
  double one_norm = 0.0;
  std::size_t zero_norm = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double elapsed_seconds = 0.0;
};

/// Invoked on the solving thread every trace_stride iterations.
using TraceSink = std::function<void(const TracePoint&)>;

}  // namespace sginv

#endif  // SGINV_SOLVE_TYPES_HPP
