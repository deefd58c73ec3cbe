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

#include "optocsd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "optocsd/error.hpp"

namespace optocsd {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix " + shape() + " needs " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteError("matrix " + shape() + " has a non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("block at (" + std::to_string(r0) + "," + std::to_string(c0) +
                         ") of size " + std::to_string(nr) + "x" + std::to_string(nc) +
                         " exceeds " + shape());
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(row(r0 + r).begin() + static_cast<std::ptrdiff_t>(c0), nc, out.row(r).begin());
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionError("cannot place " + b.shape() + " at (" + std::to_string(r0) + "," +
                         std::to_string(c0) + ") in " + shape());
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::copy(b.row(r).begin(), b.row(r).end(),
              row(r0 + r).begin() + static_cast<std::ptrdiff_t>(c0));
  }
}

std::string ComplexMatrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += aik * src[j];
    }
  }
  return out;
}

namespace {

template <class Op>
ComplexMatrix elementwise(const ComplexMatrix& a, const ComplexMatrix& b, Op op, const char* verb) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string("cannot ") + verb + " " + a.shape() + " and " + b.shape());
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = op(a(i, j), b(i, j));
  }
  return out;
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  return elementwise(a, b, std::plus<>{}, "add");
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return elementwise(a, b, std::minus<>{}, "subtract");
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot compare " + a.shape() + " with " + b.shape());
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

double unitarity_deviation(const ComplexMatrix& m) {
  if (!m.square()) {
    throw DimensionError("unitarity is undefined for non-square " + m.shape());
  }
  const std::size_t n = m.rows();
  double worst = 0.0;
  // (m^dagger m)_{ij} = sum_k conj(m_ki) m_kj
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(m(k, i)) * m(k, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) { return unitarity_deviation(m) <= tol; }

void require_unitary(const ComplexMatrix& m, double tol, const std::string& what) {
  const double dev = unitarity_deviation(m);
  if (!(dev <= tol)) {
    throw UnitarityError(what + " is not unitary: max |M^dagger M - I| = " +
                             std::to_string(dev) + " exceeds " + std::to_string(tol),
                         dev);
  }
}

QRResult householder_qr(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ComplexMatrix r = m;
  ComplexMatrix q = ComplexMatrix::identity(rows);
  std::vector<Complex> v(rows);

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k; i < rows; ++i) norm_x += std::norm(r(i, k));
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) continue;

    const Complex x0 = r(k, k);
    const Complex phase = x0 == Complex{} ? Complex{1.0} : x0 / std::abs(x0);
    const Complex alpha = -phase * norm_x;

    double norm_v = 0.0;
    for (std::size_t i = k; i < rows; ++i) {
      v[i] = r(i, k) - (i == k ? alpha : Complex{});
      norm_v += std::norm(v[i]);
    }
    norm_v = std::sqrt(norm_v);
    if (norm_v == 0.0) continue;
    for (std::size_t i = k; i < rows; ++i) v[i] /= norm_v;

    // r <- (I - 2 v v^dagger) r on rows k.., columns k..
    for (std::size_t j = k; j < cols; ++j) {
      Complex dot{};
      for (std::size_t i = k; i < rows; ++i) dot += std::conj(v[i]) * r(i, j);
      dot *= 2.0;
      for (std::size_t i = k; i < rows; ++i) r(i, j) -= v[i] * dot;
    }
    // q <- q (I - 2 v v^dagger) on columns k..
    for (std::size_t i = 0; i < rows; ++i) {
      Complex dot{};
      for (std::size_t l = k; l < rows; ++l) dot += q(i, l) * v[l];
      dot *= 2.0;
      for (std::size_t l = k; l < rows; ++l) q(i, l) -= dot * std::conj(v[l]);
    }
    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < rows; ++i) r(i, k) = 0.0;
  }
  return {std::move(q), std::move(r)};
}

ComplexMatrix svd_reassemble(const SVDResult& f) {
  ComplexMatrix sigma(f.left.cols(), f.right.cols());
  for (std::size_t i = 0; i < f.singulars.size(); ++i) sigma(i, i) = f.singulars[i];
  return f.left * sigma * f.right.adjoint();
}

ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw DimensionError("haar_random_unitary needs dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  auto [q, r] = householder_qr(z);
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const Complex phase = std::abs(d) == 0.0 ? Complex{1.0} : d / std::abs(d);
    for (std::size_t i = 0; i < dim; ++i) q(i, j) *= phase;
  }
  return q;
}

}  // namespace optocsd
