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

// One-sided (Hestenes) Jacobi SVD for complex matrices.
//
// Columns of G = M V are rotated pairwise until mutually orthogonal to
// working precision; then s_j = |g_j| and w_j = g_j / s_j. The convergence
// test is relative to the column norms, so small singular values are
// resolved to high relative accuracy.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "optocsd/error.hpp"
#include "optocsd/matrix.hpp"

namespace optocsd {
namespace {

using Column = std::vector<Complex>;

constexpr int kMaxSweeps = 80;

double squared_norm(const Column& x) {
  double acc = 0.0;
  for (const Complex& z : x) acc += std::norm(z);
  return acc;
}

Complex inner(const Column& x, const Column& y) {
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

// [x, y] <- [x, y e^{-i phi}] [[c, s], [-s, c]]
void rotate(Column& x, Column& y, double c, double s, Complex unphase) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i] * unphase;
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

SVDResult svd_tall(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<Column> g(cols, Column(rows));
  std::vector<Column> v(cols, Column(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) g[j][i] = m(i, j);
    v[j][j] = 1.0;
  }

  const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(rows);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = squared_norm(g[p]);
        const double beta = squared_norm(g[q]);
        const Complex gamma = inner(g[p], g[q]);
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;

        const Complex unphase = std::conj(gamma) / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        rotate(g[p], g[q], c, s, unphase);
        rotate(v[p], v[q], c, s, unphase);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> norms(cols);
  for (std::size_t j = 0; j < cols; ++j) norms[j] = std::sqrt(squared_norm(g[j]));
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

  SVDResult out;
  out.singulars.resize(cols);
  out.right = ComplexMatrix(cols, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    out.singulars[k] = norms[order[k]];
    for (std::size_t i = 0; i < cols; ++i) out.right(i, k) = v[order[k]][i];
  }

  // Left vectors of negligible singular values carry no information; they,
  // and the rows - cols extra columns, come from an orthogonal completion.
  const double sigma_max = cols > 0 ? out.singulars.front() : 0.0;
  const double cutoff = sigma_max * tol;
  std::size_t known = 0;
  while (known < cols && out.singulars[known] > cutoff && out.singulars[known] > 0.0) ++known;

  ComplexMatrix basis(rows, known);
  for (std::size_t k = 0; k < known; ++k) {
    const Column& col = g[order[k]];
    for (std::size_t i = 0; i < rows; ++i) basis(i, k) = col[i] / out.singulars[k];
  }
  out.left = known == 0 ? ComplexMatrix::identity(rows) : householder_qr(basis).q;
  out.left.set_block(0, 0, basis);
  return out;
}

}  // namespace

SVDResult svd(const ComplexMatrix& m) {
  for (const Complex& z : m.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteError("svd: input " + m.shape() + " has a non-finite entry");
    }
  }
  if (m.rows() >= m.cols()) return svd_tall(m);
  SVDResult t = svd_tall(m.adjoint());
  return {std::move(t.right), std::move(t.singulars), std::move(t.left)};
}

}  // namespace optocsd
