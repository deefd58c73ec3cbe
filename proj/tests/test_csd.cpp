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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "optocsd/csd.hpp"
#include "optocsd/error.hpp"
#include "test_support.hpp"

using namespace optocsd;
namespace t = optocsd::testing;

namespace {

// The 4x4 CS matrix with two angles, typed in entry by entry.
ComplexMatrix s4(double t1, double t2) {
  const double c1 = std::cos(t1), c2 = std::cos(t2), s1 = std::sin(t1), s2 = std::sin(t2);
  return ComplexMatrix(4, 4, {c1, 0, s1, 0,   //
                              0, c2, 0, s2,   //
                              -s1, 0, c1, 0,  //
                              0, -s2, 0, c2});
}

void expect_block_relations(const ComplexMatrix& u, std::size_t m) {
  const auto [a, b, c, d] = block_partition(u, m);
  const std::size_t n = u.rows() - m;
  const auto im = ComplexMatrix::identity(m);
  const auto in = ComplexMatrix::identity(n);
  EXPECT_LE(max_abs_diff(a * a.adjoint() + b * b.adjoint(), im), 1e-12);
  EXPECT_LE(max_abs_diff(c * c.adjoint() + d * d.adjoint(), in), 1e-12);
  EXPECT_LE(max_abs_diff(a.adjoint() * a + c.adjoint() * c, im), 1e-12);
  EXPECT_LE(max_abs_diff(b.adjoint() * b + d.adjoint() * d, in), 1e-12);
}

// Checks every CSDResult invariant against u.
void expect_valid_csd(const ComplexMatrix& u, const CSDResult& f, double tol = 1e-10) {
  ASSERT_EQ(f.m + f.n, u.rows());
  ASSERT_LE(f.m, f.n);
  ASSERT_EQ(f.thetas.size(), f.m);
  EXPECT_TRUE(is_unitary(f.left_top, 1e-10));
  EXPECT_TRUE(is_unitary(f.left_bottom, 1e-10));
  EXPECT_TRUE(is_unitary(f.right_top, 1e-10));
  EXPECT_TRUE(is_unitary(f.right_bottom, 1e-10));
  for (std::size_t i = 0; i < f.m; ++i) {
    EXPECT_GE(f.thetas[i], 0.0);
    EXPECT_LE(f.thetas[i], std::numbers::pi / 2);
    if (i > 0) EXPECT_LE(std::cos(f.thetas[i]), std::cos(f.thetas[i - 1]));
  }
  // Independent reassembly: explicit direct sums and naive products.
  const ComplexMatrix left = direct_sum(f.left_top, f.left_bottom);
  const ComplexMatrix right = direct_sum(f.right_top.adjoint(), f.right_bottom.adjoint());
  const ComplexMatrix back = t::naive_multiply(t::naive_multiply(left, cs_matrix(f.thetas, u.rows())), right);
  EXPECT_LE(max_abs_diff(back, u), tol);

  // L_m^dagger B R'_n = [S 0] real non-negative, L'_n^dagger C R_m = [-S; 0].
  const auto [a, b, c, d] = block_partition(u, f.m);
  const ComplexMatrix lb = f.left_top.adjoint() * b * f.right_bottom;
  const ComplexMatrix lc = f.left_bottom.adjoint() * c * f.right_top;
  for (std::size_t i = 0; i < f.m; ++i) {
    for (std::size_t j = 0; j < f.n; ++j) {
      const Complex expect_b = i == j ? Complex(std::sin(f.thetas[i])) : Complex{};
      EXPECT_LE(std::abs(lb(i, j) - expect_b), 1e-10);
      const Complex expect_c = i == j ? Complex(-std::sin(f.thetas[i])) : Complex{};
      EXPECT_LE(std::abs(lc(j, i) - expect_c), 1e-10);
    }
  }
}

}  // namespace

TEST(cs_matrix, zero_angle_is_identity) {
  const std::vector<double> th{0.0};
  EXPECT_EQ(cs_matrix(th, 2), ComplexMatrix::identity(2));
}

TEST(cs_matrix, quarter_turn_swaps_with_sign) {
  const std::vector<double> th{std::numbers::pi / 2};
  EXPECT_LE(max_abs_diff(cs_matrix(th, 2), ComplexMatrix(2, 2, {0.0, 1.0, -1.0, 0.0})), 1e-16);
}

TEST(cs_matrix, two_angles_match_written_form) {
  const std::vector<double> th{0.3, 0.7};
  EXPECT_LE(max_abs_diff(cs_matrix(th, 4), s4(0.3, 0.7)), 0.0);
}

TEST(cs_matrix, identity_padding_and_orthogonality) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi / 2);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t dim = 2 * m; dim <= 2 * m + 3; ++dim) {
      std::vector<double> th(m);
      for (double& x : th) x = ang(rng);
      const ComplexMatrix s = cs_matrix(th, dim);
      for (std::size_t i = 2 * m; i < dim; ++i) EXPECT_EQ(s(i, i), Complex(1.0));
      for (const Complex& z : s.entries()) EXPECT_EQ(z.imag(), 0.0);
      EXPECT_LE(max_abs_diff(s.adjoint() * s, ComplexMatrix::identity(dim)), 1e-14);
    }
  }
}

TEST(cs_matrix, rejects_small_dimension) {
  const std::vector<double> th{0.1, 0.2};
  EXPECT_THROW(cs_matrix(th, 3), DimensionError);
}

TEST(block_partition, identity) {
  const auto [a, b, c, d] = block_partition(ComplexMatrix::identity(4), 2);
  EXPECT_EQ(a, ComplexMatrix::identity(2));
  EXPECT_EQ(b, ComplexMatrix(2, 2));
  EXPECT_EQ(c, ComplexMatrix(2, 2));
  EXPECT_EQ(d, ComplexMatrix::identity(2));
}

TEST(block_partition, cs_matrix_blocks) {
  const auto [a, b, c, d] = block_partition(s4(0.3, 0.7), 2);
  const std::vector<Complex> cosines{std::cos(0.3), std::cos(0.7)};
  const std::vector<Complex> sines{std::sin(0.3), std::sin(0.7)};
  const std::vector<Complex> neg_sines{-std::sin(0.3), -std::sin(0.7)};
  EXPECT_EQ(a, ComplexMatrix::diagonal(cosines));
  EXPECT_EQ(b, ComplexMatrix::diagonal(sines));
  EXPECT_EQ(c, ComplexMatrix::diagonal(neg_sines));
  EXPECT_EQ(d, a);
}

TEST(block_partition, blocks_reassemble_exactly) {
  const ComplexMatrix u = haar_random_unitary(5, 9);
  const auto [a, b, c, d] = block_partition(u, 2);
  ComplexMatrix back(5, 5);
  back.set_block(0, 0, a);
  back.set_block(0, 2, b);
  back.set_block(2, 0, c);
  back.set_block(2, 2, d);
  EXPECT_EQ(back, u);
  expect_block_relations(u, 2);
}

TEST(block_partition, rejects_bad_m) {
  const auto u = ComplexMatrix::identity(4);
  EXPECT_THROW(block_partition(u, 0), DimensionError);
  EXPECT_THROW(block_partition(u, 4), DimensionError);
  EXPECT_THROW(block_partition(ComplexMatrix(3, 4), 1), DimensionError);
}

TEST(csd, identity) {
  const ComplexMatrix u = ComplexMatrix::identity(4);
  const CSDResult f = csd(u, 2);
  EXPECT_EQ(f.thetas, (std::vector<double>{0.0, 0.0}));
  expect_valid_csd(u, f, 1e-15);
  // Corner factors are diagonal phases.
  for (const ComplexMatrix* x : {&f.left_top, &f.left_bottom, &f.right_top, &f.right_bottom}) {
    EXPECT_NEAR(std::abs((*x)(0, 1)) + std::abs((*x)(1, 0)), 0.0, 1e-15);
  }
}

TEST(csd, recovers_cs_matrix_angles) {
  const ComplexMatrix u = s4(0.3, 0.7);
  const CSDResult f = csd(u, 2);
  // Cosines come out non-increasing, so 0.3 precedes 0.7.
  EXPECT_NEAR(f.thetas[0], 0.3, 1e-14);
  EXPECT_NEAR(f.thetas[1], 0.7, 1e-14);
  expect_valid_csd(u, f, 1e-12);
}

TEST(csd, haar_6_with_m_2) {
  const ComplexMatrix u = haar_random_unitary(6, 3);
  const CSDResult f = csd(u, 2);
  EXPECT_EQ(f.n, 4u);
  expect_valid_csd(u, f);
  // (L^dagger) u (R^dagger)^dagger is exactly the padded CS matrix.
  const ComplexMatrix left = direct_sum(f.left_top, f.left_bottom);
  const ComplexMatrix right = direct_sum(f.right_top, f.right_bottom);
  EXPECT_LE(max_abs_diff(left.adjoint() * u * right, cs_matrix(f.thetas, 6)), 1e-10);
}

TEST(csd, haar_grid) {
  std::uint64_t seed = 1000;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = m; n <= 8; ++n) {
      const ComplexMatrix u = haar_random_unitary(m + n, seed++);
      expect_block_relations(u, m);
      expect_valid_csd(u, csd(u, m));
    }
  }
}

TEST(csd, degenerate_inputs) {
  std::vector<std::pair<ComplexMatrix, std::size_t>> cases;
  for (std::uint64_t s = 0; s < 6; ++s) {
    cases.emplace_back(t::permutation_matrix(6, s), 2);
    cases.emplace_back(t::permutation_matrix(7, s), 3);
    cases.emplace_back(t::real_orthogonal(6, s), 3);
    cases.emplace_back(kron(haar_random_unitary(3, s), haar_random_unitary(2, s + 50)), 2);
    cases.emplace_back(kron(haar_random_unitary(2, s), ComplexMatrix::identity(3)), 3);
    cases.emplace_back(t::block_diagonal({2, 4}, s), 2);
    cases.emplace_back(t::block_diagonal({3, 3}, s), 2);
    cases.emplace_back(t::block_diagonal({1, 1, 1, 1, 1}, s), 2);
  }
  cases.emplace_back(ComplexMatrix::identity(8), 4);
  {  // top-left block identically zero
    ComplexMatrix swap(4, 4);
    swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = 1.0;
    cases.emplace_back(swap, 2);
  }
  for (const auto& [u, m] : cases) {
    ASSERT_TRUE(is_unitary(u, 1e-12));
    expect_valid_csd(u, csd(u, m));
  }
}

TEST(csd, nearly_degenerate_angles) {
  // Angles closer than any clustering threshold would resolve.
  const std::vector<double> th{1e-9, 2e-9, 0.5, 0.5 + 1e-12, std::numbers::pi / 2 - 1e-10};
  const ComplexMatrix core = cs_matrix(th, 12);
  const ComplexMatrix u = direct_sum(haar_random_unitary(5, 1), haar_random_unitary(7, 2)) * core *
                          direct_sum(haar_random_unitary(5, 3), haar_random_unitary(7, 4));
  const CSDResult f = csd(u, 5);
  expect_valid_csd(u, f);
  for (std::size_t i = 0; i < th.size(); ++i) EXPECT_NEAR(f.thetas[i], th[i], 1e-8);
}

TEST(csd, errors) {
  const std::vector<Complex> d{1.0, 2.0, 1.0, 1.0};
  try {
    csd(ComplexMatrix::diagonal(d), 2);
    FAIL() << "expected UnitarityError";
  } catch (const UnitarityError& e) {
    EXPECT_DOUBLE_EQ(e.deviation(), 3.0);
  }
  EXPECT_THROW(csd(haar_random_unitary(6, 1), 4), DimensionError);
  EXPECT_THROW(csd(haar_random_unitary(6, 1), 0), DimensionError);
  EXPECT_THROW(csd(ComplexMatrix(4, 5), 2), DimensionError);
}

TEST(csd, reassemble_helper_agrees) {
  const ComplexMatrix u = haar_random_unitary(7, 21);
  EXPECT_LE(max_abs_diff(csd_reassemble(csd(u, 3)), u), 1e-12);
}
