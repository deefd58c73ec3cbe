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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace optocsd {

using Complex = std::complex<double>;

/// Default tolerance for unitarity checks on inputs and factors.
inline constexpr double kUnitarityTol = 1e-10;

/// Dense row-major complex matrix.
///
/// Entries are always finite; the checked constructor rejects NaN/Inf.
/// Arithmetic results are not re-validated.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `entries`. Throws DimensionError if the
  /// length is not rows*cols, NonFiniteError on NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  /// Copy of the nr x nc sub-matrix whose top-left corner is (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  /// Overwrites the region starting at (r0, c0) with `b`.
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

  /// "rows x cols", used in error messages.
  std::string shape() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Matrix product. Throws DimensionError naming both shapes when a.cols != b.rows.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal a (+) b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);

/// max-abs entry of a - b; DimensionError when shapes differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max-abs entry of (m^dagger m - I). DimensionError for non-square input.
double unitarity_deviation(const ComplexMatrix& m);

/// True iff unitarity_deviation(m) <= tol.
bool is_unitary(const ComplexMatrix& m, double tol = kUnitarityTol);

/// Throws UnitarityError carrying the measured deviation when m is not
/// unitary within tol. `what` prefixes the message.
void require_unitary(const ComplexMatrix& m, double tol, const std::string& what);

struct QRResult {
  ComplexMatrix q;  // rows x rows unitary
  ComplexMatrix r;  // rows x cols upper triangular
};

/// Full Householder QR, m = q * r.
QRResult householder_qr(const ComplexMatrix& m);

struct SVDResult {
  ComplexMatrix left;            // W, rows x rows unitary
  std::vector<double> singulars; // min(rows, cols) values, non-increasing
  ComplexMatrix right;           // V, cols x cols unitary
};

/// Full singular value decomposition m = W diag(s) V^dagger, computed by
/// one-sided Jacobi rotations. No sign or phase convention is imposed on
/// the singular vectors. Throws NonFiniteError on NaN/Inf input.
SVDResult svd(const ComplexMatrix& m);

/// W diag(s) V^dagger, with diag(s) padded to the rectangular shape.
ComplexMatrix svd_reassemble(const SVDResult& f);

/// Haar-distributed dim x dim unitary: QR of a complex Gaussian matrix with
/// the phases of R's diagonal moved into Q. Deterministic per seed on a
/// given standard library. Throws DimensionError for dim == 0.
ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace optocsd
