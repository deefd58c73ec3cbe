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

#include <cstddef>
#include <span>
#include <vector>

#include "optocsd/matrix.hpp"

namespace optocsd {

/// Factors of u = (L_m (+) L'_n) (S_2m(theta) (+) 1_{n-m}) (R_m^dagger (+) R'_n^dagger).
struct CSDResult {
  ComplexMatrix left_top;      // L_m
  ComplexMatrix left_bottom;   // L'_n
  std::vector<double> thetas;  // m mixing angles in [0, pi/2], cosines non-increasing
  ComplexMatrix right_top;     // R_m
  ComplexMatrix right_bottom;  // R'_n
  std::size_t m = 0;
  std::size_t n = 0;
};

struct BlockPartition {
  ComplexMatrix a;  // m x m
  ComplexMatrix b;  // m x n
  ComplexMatrix c;  // n x m
  ComplexMatrix d;  // n x n
};

/// S_2m(theta) (+) 1_{total_dim - 2m}: cosines on both diagonal blocks,
/// +sin in the top-right block, -sin in the bottom-left block.
/// Throws DimensionError when 2 * thetas.size() > total_dim.
ComplexMatrix cs_matrix(std::span<const double> thetas, std::size_t total_dim);

/// Splits square u into its 2x2 block form with an m x m top-left block.
/// Throws DimensionError unless 1 <= m < u.rows().
BlockPartition block_partition(const ComplexMatrix& u, std::size_t m);

/// Cosine-sine decomposition with an m x m top-left block, m <= n.
///
/// L_m, R_m and the cosines come from the SVD of the top-left block. The
/// bottom factors are fixed from them so that L_m^dagger B R'_n = [sin 0]
/// and L'_n^dagger C R_m = [-sin; 0] exactly, which keeps the result valid
/// when singular values repeat.
///
/// Throws DimensionError (shape, m > n), UnitarityError (deviation > tol).
CSDResult csd(const ComplexMatrix& u, std::size_t m, double tol = kUnitarityTol);

/// Multiplies the factors back together.
ComplexMatrix csd_reassemble(const CSDResult& f);

}  // namespace optocsd
