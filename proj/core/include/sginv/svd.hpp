// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_SVD_HPP
#define SGINV_SVD_HPP

#include <cstddef>
#include <vector>

#include "sginv/matrix.hpp"

namespace sginv {

/// Full SVD of an m x n matrix A = [U1 U2] diag(D, 0) [V1 V2]^T, split at the
/// numerical rank r. U1 is m x r, U2 is m x (m-r), V1 is n x r, V2 is
/// n x (n-r); D holds the r positive singular values in descending order.
struct Svd {
  Matrix u1, u2, v1, v2;
  std::vector<double> d;
  std::size_t m = 0, n = 0, r = 0;
};

inline constexpr double kDefaultRankTol = 1e-10;

/// Full SVD with numerical rank r = #{sigma_i > rank_tol * sigma_1}.
/// Throws std::invalid_argument for a zero matrix or non-positive tolerance,
/// std::runtime_error if the decomposition fails to converge.
Svd full_svd(const Matrix& a, double rank_tol = kDefaultRankTol);

/// V1 D^{-1} U1^T, the Moore-Penrose pseudoinverse.
Matrix pseudoinverse(const Svd& svd);

/// Blocks of Gamma = V^T H U for a candidate inverse H (n x m):
///   X = V1^T H U1 (r x r)        Y = V1^T H U2 (r x (m-r))
///   Z = V2^T H U1 ((n-r) x r)    W = V2^T H U2 ((n-r) x (m-r))
/// Each Moore-Penrose property pins one block: X = D^{-1} for P1, and given
/// that, Y = 0 for P3, Z = 0 for P4, ZDY = W for P2.
struct GammaBlocks {
  Matrix x, y, z, w;
};

GammaBlocks gamma_of(const Svd& svd, const Matrix& h);

/// H = V1 X U1^T + V1 Y U2^T + V2 Z U1^T + V2 W U2^T (inverse of gamma_of).
Matrix reconstruct_h(const Svd& svd, const GammaBlocks& blocks);

}  // namespace sginv

#endif  // SGINV_SVD_HPP
