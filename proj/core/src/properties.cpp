// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include "sginv/properties.hpp"

#include <stdexcept>

#include "eigen_bridge.hpp"
#include "sginv/svd.hpp"

namespace sginv {

std::optional<ProblemKind> problem_from_string(std::string_view name) {
  if (name == "p13") return ProblemKind::P13;
  if (name == "p123") return ProblemKind::P123;
  if (name == "p134") return ProblemKind::P134;
  return std::nullopt;
}

PropertyResiduals residuals(const Matrix& a, const Matrix& a_dagger,
                            const Matrix& h) {
  if (h.rows() != a.cols() || h.cols() != a.rows() ||
      a_dagger.rows() != a.cols() || a_dagger.cols() != a.rows()) {
    throw std::invalid_argument(
        "residuals: H and A+ must both be cols(A) x rows(A)");
  }
  const auto ae = detail::as_eigen(a);
  const auto he = detail::as_eigen(h);
  const auto pe = detail::as_eigen(a_dagger);

  const Eigen::MatrixXd ah = ae * he;
  const Eigen::MatrixXd ha = he * ae;
  const Eigen::MatrixXd at = ae.transpose();

  PropertyResiduals out;
  out.p1 = (ah * ae - ae).norm();
  out.p2 = (ha * he - he).norm();
  out.p3 = (ah.transpose() - ah).norm();
  out.p4 = (ha.transpose() - ha).norm();
  out.pls = (at * ah - at).norm();
  out.plsr = (at * he.transpose() * at + he * (ae * pe) - at - he).norm();
  out.pmn = (ae * at * he.transpose() - ae).norm();
  out.pmx = (ae * at * he.transpose() + he.transpose() * at * ae - 2.0 * ae)
                .norm();
  return out;
}

bool satisfies(ProblemKind problem, const PropertyResiduals& res, double tol) {
  switch (problem) {
    case ProblemKind::P13: return res.pls <= tol;
    case ProblemKind::P123: return res.plsr <= tol;
    case ProblemKind::P134: return res.pmx <= tol;
  }
  return false;
}

SparsityBounds bounds(std::size_t m, std::size_t n, std::size_t r) {
  if (r == 0 || r > std::min(m, n)) {
    throw std::invalid_argument("bounds: need 1 <= r <= min(m, n)");
  }
  SparsityBounds out;
  out.beta13 = m * r;
  out.beta123 = m * r + (m - r) * (n - r);
  out.beta134 = m * n - (m - r) * (n - r);
  return out;
}

std::size_t bound_for(ProblemKind problem, const SparsityBounds& b) {
  switch (problem) {
    case ProblemKind::P13: return b.beta13;
    case ProblemKind::P123: return b.beta123;
    case ProblemKind::P134: return b.beta134;
  }
  return 0;
}

std::size_t kron_system_rank(const Matrix& a) {
  // The eigenvalues of the Kronecker sum are sigma_i^2 + sigma_j^2 over all
  // (i, j) in [n] x [m]; only pairs of two vanishing singular values vanish.
  const Svd svd = full_svd(a);
  const std::size_t zero_pairs = (svd.m - svd.r) * (svd.n - svd.r);
  return svd.m * svd.n - zero_pairs;
}

double factor(double x, double baseline) {
  if (baseline == 0.0) {
    throw std::invalid_argument("factor: zero baseline");
  }
  return (x - baseline) / baseline;
}

}  // namespace sginv
