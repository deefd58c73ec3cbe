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
#include <sstream>

#include "gtest/gtest.h"

#include "optocsd/error.hpp"
#include "optocsd/matrix.hpp"
#include "optocsd/matrix_io.hpp"
#include "test_support.hpp"

using namespace optocsd;
using optocsd::testing::naive_multiply;
using optocsd::testing::random_gaussian;

TEST(matrix, identity_times_m) {
  const ComplexMatrix m = random_gaussian(3, 4, 1);
  EXPECT_EQ(multiply(ComplexMatrix::identity(3), m), m);
}

TEST(matrix, swap_is_involution) {
  const ComplexMatrix swap(2, 2, {0.0, 1.0, 1.0, 0.0});
  EXPECT_EQ(swap * swap, ComplexMatrix::identity(2));
}

TEST(matrix, multiply_matches_naive_loop) {
  const ComplexMatrix a = random_gaussian(4, 4, 10);
  const ComplexMatrix b = random_gaussian(4, 4, 11);
  EXPECT_LE(max_abs_diff(a * b, naive_multiply(a, b)), 1e-14);
}

TEST(matrix, multiply_dimension_mismatch_names_shapes) {
  try {
    multiply(ComplexMatrix(2, 3), ComplexMatrix(2, 3));
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("2x3"), std::string::npos) << what;
  }
}

TEST(matrix, multiply_is_associative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dims(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t p = dims(rng), q = dims(rng), r = dims(rng), s = dims(rng);
    const auto a = random_gaussian(p, q, 100 + trial);
    const auto b = random_gaussian(q, r, 200 + trial);
    const auto c = random_gaussian(r, s, 300 + trial);
    EXPECT_LE(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
  }
}

TEST(matrix, constructor_rejects_bad_entries) {
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(ComplexMatrix(1, 2, {1.0, Complex(NAN, 0.0)}), NonFiniteError);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), NonFiniteError);
}

TEST(matrix, direct_sum_and_kron) {
  const ComplexMatrix a(1, 1, {2.0});
  const ComplexMatrix b(2, 2, {1.0, 2.0, 3.0, 4.0});
  const ComplexMatrix ds = direct_sum(a, b);
  EXPECT_EQ(ds, ComplexMatrix(3, 3, {2.0, 0.0, 0.0, 0.0, 1.0, 2.0, 0.0, 3.0, 4.0}));
  const ComplexMatrix k = kron(b, ComplexMatrix::identity(2));
  EXPECT_EQ(k(0, 2), Complex(2.0));
  EXPECT_EQ(k(3, 1), Complex(3.0));
  EXPECT_EQ(k(1, 0), Complex(0.0));
}

TEST(matrix, is_unitary_examples) {
  EXPECT_TRUE(is_unitary(ComplexMatrix::identity(5), 1e-12));
  const std::vector<Complex> d{1.0, 2.0};
  EXPECT_FALSE(is_unitary(ComplexMatrix::diagonal(d), 1e-12));
  EXPECT_THROW(is_unitary(ComplexMatrix(2, 3), 1e-12), DimensionError);
}

TEST(matrix, require_unitary_reports_deviation) {
  const std::vector<Complex> d{1.0, 2.0};
  try {
    require_unitary(ComplexMatrix::diagonal(d), 1e-10, "probe");
    FAIL() << "expected UnitarityError";
  } catch (const UnitarityError& e) {
    EXPECT_DOUBLE_EQ(e.deviation(), 3.0);
  }
}

TEST(matrix, householder_qr_factors) {
  for (auto [r, c] : {std::pair{5, 3}, std::pair{3, 5}, std::pair{4, 4}, std::pair{1, 1}}) {
    const auto m = random_gaussian(r, c, 42);
    const auto [q, upper] = householder_qr(m);
    EXPECT_TRUE(is_unitary(q, 1e-13));
    EXPECT_LE(max_abs_diff(q * upper, m), 1e-13);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < std::min(i, c); ++j) EXPECT_EQ(upper(i, j), Complex(0.0));
    }
  }
}

TEST(haar, dim_one_is_unit_modulus) {
  const ComplexMatrix u = haar_random_unitary(1, 0);
  ASSERT_EQ(u.rows(), 1u);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(haar, deterministic_per_seed) {
  EXPECT_EQ(haar_random_unitary(4, 7), haar_random_unitary(4, 7));
  EXPECT_NE(haar_random_unitary(4, 7), haar_random_unitary(4, 8));
}

TEST(haar, dim6_seed1_is_unitary) { EXPECT_TRUE(is_unitary(haar_random_unitary(6, 1), 1e-10)); }

TEST(haar, rejects_zero_dim) { EXPECT_THROW(haar_random_unitary(0, 1), DimensionError); }

TEST(haar, unitary_for_all_dims_and_seeds) {
  for (std::size_t dim = 1; dim <= 64; ++dim) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ASSERT_TRUE(is_unitary(haar_random_unitary(dim, seed), 1e-10)) << dim << " " << seed;
    }
  }
}

// With phase-fixed QR the diagonal entries of a Haar unitary have
// E|u_ii|^2 = 1/n and zero-mean phase; a phase-biased QR would fail this.
TEST(haar, diagonal_moments) {
  const std::size_t n = 3;
  const int samples = 20000;
  double mean_abs2 = 0.0;
  Complex mean{};
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix u = haar_random_unitary(n, static_cast<std::uint64_t>(s));
    mean_abs2 += std::norm(u(0, 0));
    mean += u(0, 0);
  }
  mean_abs2 /= samples;
  mean /= static_cast<double>(samples);
  EXPECT_NEAR(mean_abs2, 1.0 / n, 0.01);
  EXPECT_LT(std::abs(mean), 0.02);
}

TEST(matrix_io, format_complex_examples) {
  EXPECT_EQ(format_complex(Complex(0.5, -0.25)), "0.5-0.25j");
  EXPECT_EQ(format_complex(Complex(1.0, 0.0)), "1+0j");
  EXPECT_EQ(parse_complex("0.5-0.25j"), Complex(0.5, -0.25));
  EXPECT_EQ(parse_complex("-1e-05+2.5e+03j"), Complex(-1e-5, 2.5e3));
  EXPECT_EQ(parse_complex("3"), Complex(3.0, 0.0));
  EXPECT_EQ(parse_complex("-2j"), Complex(0.0, -2.0));
}

TEST(matrix_io, parse_complex_rejects_garbage) {
  for (const char* bad : {"", "j", "1+2", "1+2i", "abc", "1+2jj", "nan+0j", "1+infj", "1 +2j"}) {
    EXPECT_THROW(parse_complex(bad), ParseError) << bad;
  }
}

TEST(matrix_io, text_round_trip_is_bit_exact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ComplexMatrix m = random_gaussian(1 + seed % 5, 1 + seed % 3, seed);
    m(0, 0) = Complex(1e-300, -1e300);
    std::stringstream buf;
    write_matrix(buf, m);
    EXPECT_EQ(read_matrix(buf), m);
  }
}

TEST(matrix_io, read_rejects_malformed) {
  for (const char* bad : {"", "2\n1 2", "2 2\n1 2 3", "2 2\n1 2 3 4 5", "0 1\n", "1 1\n1+xj",
                          "-1 2\n1 2"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_matrix(in), ParseError) << bad;
  }
}
