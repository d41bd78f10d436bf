// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include "sginv/svd.hpp"

#include <Eigen/SVD>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"

namespace sginv {

Svd full_svd(const Matrix& a, double rank_tol) {
  if (!(rank_tol > 0.0)) {
    throw std::invalid_argument("full_svd: rank_tol must be positive");
  }
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument("full_svd: empty matrix");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> dec(detail::as_eigen(a),
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (dec.info() != Eigen::Success) {
    throw std::runtime_error("full_svd: decomposition did not converge after " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " bidiagonal sweep");
  }

  const Eigen::VectorXd& sigma = dec.singularValues();
  const double sigma1 = sigma.size() > 0 ? sigma(0) : 0.0;
  if (!(sigma1 > 0.0)) {
    throw std::invalid_argument("full_svd: zero matrix has no rank split");
  }

  std::size_t r = 0;
  while (r < static_cast<std::size_t>(sigma.size()) &&
         sigma(static_cast<Eigen::Index>(r)) > rank_tol * sigma1) {
    ++r;
  }

  const auto m = a.rows();
  const auto n = a.cols();
  const Eigen::MatrixXd& u = dec.matrixU();
  const Eigen::MatrixXd& v = dec.matrixV();

  Svd out;
  out.m = m;
  out.n = n;
  out.r = r;
  out.d.assign(sigma.data(), sigma.data() + r);
  out.u1 = detail::from_eigen(u.leftCols(static_cast<Eigen::Index>(r)));
  out.u2 = detail::from_eigen(u.rightCols(static_cast<Eigen::Index>(m - r)));
  out.v1 = detail::from_eigen(v.leftCols(static_cast<Eigen::Index>(r)));
  out.v2 = detail::from_eigen(v.rightCols(static_cast<Eigen::Index>(n - r)));
  return out;
}

Matrix pseudoinverse(const Svd& svd) {
  // V1 D^{-1} U1^T with D applied as a row scaling of U1^T.
  Eigen::MatrixXd u1t = detail::as_eigen(svd.u1).transpose();
  for (std::size_t i = 0; i < svd.r; ++i) {
    u1t.row(static_cast<Eigen::Index>(i)) /= svd.d[i];
  }
  return detail::from_eigen(detail::as_eigen(svd.v1) * u1t);
}

GammaBlocks gamma_of(const Svd& svd, const Matrix& h) {
  if (h.rows() != svd.n || h.cols() != svd.m) {
    throw std::invalid_argument("gamma_of: H must be n x m");
  }
  const auto he = detail::as_eigen(h);
  const Eigen::MatrixXd hu1 = he * detail::as_eigen(svd.u1);
  const Eigen::MatrixXd hu2 = he * detail::as_eigen(svd.u2);
  GammaBlocks out;
  out.x = detail::from_eigen(detail::as_eigen(svd.v1).transpose() * hu1);
  out.y = detail::from_eigen(detail::as_eigen(svd.v1).transpose() * hu2);
  out.z = detail::from_eigen(detail::as_eigen(svd.v2).transpose() * hu1);
  out.w = detail::from_eigen(detail::as_eigen(svd.v2).transpose() * hu2);
  return out;
}

Matrix reconstruct_h(const Svd& svd, const GammaBlocks& blocks) {
  const auto check = [](const Matrix& b, std::size_t rows, std::size_t cols,
                        const char* name) {
    if (b.rows() != rows || b.cols() != cols) {
      throw std::invalid_argument(std::string("reconstruct_h: block ") + name +
                                  " has wrong shape");
    }
  };
  const std::size_t mr = svd.m - svd.r;
  const std::size_t nr = svd.n - svd.r;
  check(blocks.x, svd.r, svd.r, "X");
  check(blocks.y, svd.r, mr, "Y");
  check(blocks.z, nr, svd.r, "Z");
  check(blocks.w, nr, mr, "W");

  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(svd.n),
                                              static_cast<Eigen::Index>(svd.m));
  const auto v1 = detail::as_eigen(svd.v1);
  const auto v2 = detail::as_eigen(svd.v2);
  const auto u1t = detail::as_eigen(svd.u1).transpose();
  const auto u2t = detail::as_eigen(svd.u2).transpose();
  acc.noalias() += v1 * detail::as_eigen(blocks.x) * u1t;
  acc.noalias() += v1 * detail::as_eigen(blocks.y) * u2t;
  acc.noalias() += v2 * detail::as_eigen(blocks.z) * u1t;
  acc.noalias() += v2 * detail::as_eigen(blocks.w) * u2t;
  return detail::from_eigen(acc);
}

}  // namespace sginv
