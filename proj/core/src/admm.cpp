// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include "sginv/admm.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "eigen_bridge.hpp"
#include "sginv/drs.hpp"

namespace sginv {

namespace {

void require_admm_problem(ProblemKind problem) {
  if (problem == ProblemKind::P13) {
    throw std::invalid_argument(
        "admm: P13 is unsupported; it would need both free blocks, "
        "use the DRS solver instead");
  }
}

// U1 for the Z block (P123), U2 for the W block (P134).
const Matrix& basis_for(const Svd& svd, ProblemKind problem) {
  return problem == ProblemKind::P123 ? svd.u1 : svd.u2;
}

}  // namespace

AdmmState admm_init(const Svd& svd, ProblemKind problem, double rho) {
  require_admm_problem(problem);
  if (!(rho > 0.0)) {
    throw std::invalid_argument("admm_init: rho must be positive");
  }
  const Matrix v1u1t = matmul(svd.v1, transpose(svd.u1));
  const double scale = inf_norm_entrywise(v1u1t);
  AdmmState state;
  state.lambda_scaled = (1.0 / (scale * rho)) * v1u1t;
  state.h = pseudoinverse(svd) + state.lambda_scaled;
  const std::size_t block_cols =
      problem == ProblemKind::P123 ? svd.r : svd.m - svd.r;
  state.free_block = Matrix(svd.n - svd.r, block_cols);
  return state;
}

std::pair<double, double> admm_residuals(const AdmmState& state,
                                         const AdmmState& state_prev,
                                         const Svd& svd, ProblemKind problem,
                                         double rho) {
  require_admm_problem(problem);
  const Matrix& ub = basis_for(svd, problem);
  const Matrix recon =
      pseudoinverse(svd) +
      matmul(svd.v2, matmul(state.free_block, transpose(ub)));
  const double rp = frobenius_norm(recon - state.h);
  const Matrix dh = state.h - state_prev.h;
  const double rd =
      rho * frobenius_norm(matmul(transpose(svd.v2), matmul(dh, ub)));
  return {rp, rd};
}

SolveReport admm_solve(const Svd& svd, ProblemKind problem,
                       const AdmmConfig& cfg, const TraceSink* trace) {
  require_admm_problem(problem);
  if (cfg.stop.kind == StopRule::Kind::FixedPoint) {
    throw std::invalid_argument("admm_solve: no fixed-point rule for ADMM");
  }
  if (cfg.stop.kind == StopRule::Kind::TargetOneNorm &&
      !(cfg.stop.target > 0.0)) {
    throw std::invalid_argument("admm_solve: target 1-norm must be positive");
  }
  if (cfg.max_iter == 0) {
    throw std::invalid_argument("admm_solve: max_iter must be positive");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  const Matrix pinv = pseudoinverse(svd);
  const Matrix& ub = basis_for(svd, problem);
  const std::size_t free_rows = svd.n - svd.r;
  const std::size_t free_cols = ub.cols();

  SolveReport report;

  if (free_rows == 0 || free_cols == 0) {
    // Empty free block: the feasible set is the singleton {A+}.
    report.h = pinv;
    report.iterations = 1;
    report.status = SolveStatus::Converged;
    report.elapsed_seconds = elapsed();
    report.one_norm = one_norm(report.h);
    report.zero_norm = zero_norm(report.h, kNonzeroTolerance);
    return report;
  }

  const auto pinv_e = detail::as_eigen(pinv);
  const auto v2 = detail::as_eigen(svd.v2);
  const auto ub_e = detail::as_eigen(ub);
  const double pinv_fro = pinv_e.norm();
  const double primal_dim = std::sqrt(static_cast<double>(svd.n * svd.m));
  // Dual threshold dimension as printed in the stopping rule, sqrt((n-r)r),
  // for both block shapes.
  const double dual_dim = std::sqrt(static_cast<double>(free_rows * svd.r));

  AdmmState state = admm_init(svd, problem, cfg.rho);
  Eigen::MatrixXd h = detail::as_eigen(state.h);
  Eigen::MatrixXd lambda = detail::as_eigen(state.lambda_scaled);
  Eigen::MatrixXd block(free_rows, free_cols);
  Eigen::MatrixXd recon(svd.n, svd.m);
  Eigen::MatrixXd h_prev;

  report.status = SolveStatus::IterLimit;
  double rp = 0.0, rd = 0.0;

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const Eigen::MatrixXd j = h - pinv_e - lambda;
    block.noalias() = v2.transpose() * j * ub_e;
    recon.noalias() = v2 * block * ub_e.transpose();
    const double struct_fro = recon.norm();
    recon += pinv_e;

    h_prev = std::move(h);
    h = recon + lambda;
    // H^{k+1} = S_{1/rho}(reconstruction + Lambda^k), entrywise
    const double kappa = 1.0 / cfg.rho;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
      double& a = h.data()[i];
      a = a > kappa ? a - kappa : (a < -kappa ? a + kappa : 0.0);
    }

    const Eigen::MatrixXd r_mat = recon - h;
    lambda += r_mat;
    report.iterations = k + 1;

    const auto compute_residuals = [&] {
      rp = r_mat.norm();
      rd = cfg.rho * (v2.transpose() * (h - h_prev) * ub_e).norm();
    };
    bool have_residuals =
        cfg.stop.kind == StopRule::Kind::Residual ||
        (trace && cfg.trace_stride > 0 &&
         report.iterations % cfg.trace_stride == 0) ||
        k + 1 == cfg.max_iter;
    if (have_residuals) compute_residuals();

    bool stop = false;
    switch (cfg.stop.kind) {
      case StopRule::Kind::Residual: {
        const double rp_tol =
            cfg.eps_abs * primal_dim +
            cfg.eps_rel * std::max({h.norm(), struct_fro, pinv_fro});
        const double rd_tol =
            cfg.eps_abs * dual_dim +
            cfg.eps_rel * cfg.rho *
                (v2.transpose() * lambda * ub_e).norm();
        if (rp <= rp_tol && rd <= rd_tol) {
          report.status = SolveStatus::Converged;
          stop = true;
        }
        break;
      }
      case StopRule::Kind::TargetOneNorm: {
        if (recon.cwiseAbs().sum() <=
            cfg.stop.target * (1.0 + cfg.stop.rel_factor)) {
          report.status = SolveStatus::TargetReached;
          stop = true;
        }
        break;
      }
      case StopRule::Kind::FixedPoint:
        break;
    }

    if (trace && cfg.trace_stride > 0 &&
        report.iterations % cfg.trace_stride == 0) {
      TracePoint pt;
      pt.iter = report.iterations;
      pt.one_norm = recon.cwiseAbs().sum();
      pt.zero_norm = 0;
      for (Eigen::Index i = 0; i < recon.size(); ++i) {
        if (std::abs(recon.data()[i]) > kNonzeroTolerance) ++pt.zero_norm;
      }
      pt.primal_residual = rp;
      pt.dual_residual = rd;
      pt.elapsed_seconds = elapsed();
      (*trace)(pt);
    }

    if (!stop && elapsed() > cfg.time_limit_seconds) {
      report.status = SolveStatus::TimeLimit;
      stop = true;
    }
    if (stop) {
      if (!have_residuals) compute_residuals();
      break;
    }
  }

  report.h = detail::from_eigen(recon);
  report.elapsed_seconds = elapsed();
  report.one_norm = one_norm(report.h);
  report.zero_norm = zero_norm(report.h, kNonzeroTolerance);
  report.final_primal_residual = rp;
  report.final_dual_residual = rd;
  return report;
}

}  // namespace sginv
