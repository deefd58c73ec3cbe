// Copyright 2026 The optocsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optocsd/csd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "optocsd/error.hpp"

namespace optocsd {
namespace {

// Cosines closer than this are treated as one degenerate group.
constexpr double kCosineCluster = 1e-8;

// Columns orthogonal relative to their own norms.
bool relatively_orthogonal(const ComplexMatrix& z) {
  const ComplexMatrix gram = z.adjoint() * z;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = i + 1; j < gram.cols(); ++j) {
      const double scale = std::sqrt(gram(i, i).real() * gram(j, j).real());
      if (std::abs(gram(i, j)) > 1e-12 * scale) return false;
    }
  }
  return true;
}

}  // namespace

ComplexMatrix cs_matrix(std::span<const double> thetas, std::size_t total_dim) {
  const std::size_t m = thetas.size();
  if (2 * m > total_dim) {
    throw DimensionError("cs_matrix: " + std::to_string(m) + " angles need dimension >= " +
                         std::to_string(2 * m) + ", got " + std::to_string(total_dim));
  }
  ComplexMatrix s = ComplexMatrix::identity(total_dim);
  for (std::size_t i = 0; i < m; ++i) {
    const double c = std::cos(thetas[i]);
    const double sn = std::sin(thetas[i]);
    s(i, i) = c;
    s(i + m, i + m) = c;
    s(i, i + m) = sn;
    s(i + m, i) = -sn;
  }
  return s;
}

BlockPartition block_partition(const ComplexMatrix& u, std::size_t m) {
  if (!u.square()) throw DimensionError("block_partition: " + u.shape() + " is not square");
  if (m < 1 || m >= u.rows()) {
    throw DimensionError("block_partition: m = " + std::to_string(m) + " outside [1, " +
                         std::to_string(u.rows() - 1) + "] for " + u.shape());
  }
  const std::size_t n = u.rows() - m;
  return {u.block(0, 0, m, m), u.block(0, m, m, n), u.block(m, 0, n, m), u.block(m, m, n, n)};
}

CSDResult csd(const ComplexMatrix& u, std::size_t m, double tol) {
  if (!u.square()) throw DimensionError("csd: " + u.shape() + " is not square");
  if (m < 1 || 2 * m > u.rows()) {
    throw DimensionError("csd: need 1 <= m <= n, got m = " + std::to_string(m) + " for " +
                         u.shape());
  }
  require_unitary(u, tol, "csd input");

  const std::size_t n = u.rows() - m;
  const auto [a, b, c, d] = block_partition(u, m);

  // Top factors and cosines: A = L_m diag(cos) R_m^dagger.
  SVDResult top = svd(a);
  ComplexMatrix lm = std::move(top.left);
  ComplexMatrix rm = std::move(top.right);
  std::vector<double> cosines = std::move(top.singulars);

  // Columns of C R_m should be mutually orthogonal with norms sin(theta_i).
  // When cosines coincide to working precision the SVD of A cannot tell
  // their singular vectors apart, and small sines come out mixed. Within
  // each run of cosines closer than kCosineCluster, re-diagonalize with an
  // SVD of that slice of C R_m and rotate L_m and R_m by the same unitary,
  // which leaves A's block diagonal.
  ComplexMatrix crm = c * rm;
  for (std::size_t lo = 0; lo < m;) {
    std::size_t hi = lo + 1;
    while (hi < m && cosines[hi - 1] - cosines[hi] <= kCosineCluster) ++hi;
    const std::size_t g = hi - lo;
    if (g > 1 && !relatively_orthogonal(crm.block(0, lo, n, g))) {
      SVDResult slice = svd(crm.block(0, lo, n, g));
      // Ascending sines keep the cosines in descending order.
      ComplexMatrix y(g, g);
      for (std::size_t k = 0; k < g; ++k) {
        for (std::size_t i = 0; i < g; ++i) y(i, k) = slice.right(i, g - 1 - k);
      }
      lm.set_block(0, lo, lm.block(0, lo, m, g) * y);
      rm.set_block(0, lo, rm.block(0, lo, m, g) * y);
      crm.set_block(0, lo, c * rm.block(0, lo, m, g));
      const ComplexMatrix a_slice = lm.block(0, lo, m, g).adjoint() * a * rm.block(0, lo, m, g);
      for (std::size_t k = 0; k < g; ++k) cosines[lo + k] = a_slice(k, k).real();
    }
    lo = hi;
  }

  // A Householder QR of C R_m, taken in order of decreasing column norm,
  // turns its columns into the first m columns of L'_n; columns whose sine
  // is negligible get an arbitrary orthonormal direction, which is all the
  // CS form requires.
  std::vector<double> col_norm(m);
  for (std::size_t j = 0; j < m; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(crm(i, j));
    col_norm[j] = std::sqrt(acc);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return col_norm[x] > col_norm[y]; });

  ComplexMatrix ordered(n, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) ordered(i, k) = crm(i, order[k]);
  }
  const QRResult qr = householder_qr(ordered);

  ComplexMatrix lpn(n, n);
  std::vector<double> sines(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t j = order[k];
    const Complex r = qr.r(k, k);
    // Phase so that (L'_n^dagger C R_m)_{jj} = -|r|.
    const Complex phase = std::abs(r) == 0.0 ? Complex{1.0} : -r / std::abs(r);
    for (std::size_t i = 0; i < n; ++i) lpn(i, j) = qr.q(i, k) * phase;
    sines[j] = std::abs(r);
  }
  for (std::size_t k = m; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) lpn(i, k) = qr.q(i, k);
  }

  std::vector<double> thetas(m);
  for (std::size_t i = 0; i < m; ++i) {
    thetas[i] = std::clamp(std::atan2(sines[i], cosines[i]), 0.0, std::numbers::pi / 2);
    // Rounding can break ties the wrong way; keep cosines non-increasing.
    if (i > 0) thetas[i] = std::max(thetas[i], thetas[i - 1]);
  }

  // Rows of R'_n^dagger. With B~ = L_m^dagger B and N = L'_n^dagger D the
  // leading rows satisfy B~_i = sin_i r_i and N_i = cos_i r_i, so
  // r_i = sin_i B~_i + cos_i N_i; the remaining rows are N_i.
  const ComplexMatrix bt = lm.adjoint() * b;
  const ComplexMatrix nd = lpn.adjoint() * d;
  ComplexMatrix rpn_adj = nd;
  for (std::size_t i = 0; i < m; ++i) {
    const double cs = std::cos(thetas[i]);
    const double sn = std::sin(thetas[i]);
    for (std::size_t k = 0; k < n; ++k) rpn_adj(i, k) = sn * bt(i, k) + cs * nd(i, k);
  }

  return {lm, std::move(lpn), std::move(thetas), rm, rpn_adj.adjoint(), m, n};
}

ComplexMatrix csd_reassemble(const CSDResult& f) {
  const ComplexMatrix left = direct_sum(f.left_top, f.left_bottom);
  const ComplexMatrix right = direct_sum(f.right_top.adjoint(), f.right_bottom.adjoint());
  return left * cs_matrix(f.thetas, f.m + f.n) * right;
}

}  // namespace optocsd
