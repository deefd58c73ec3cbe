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
#include <variant>
#include <vector>

#include "optocsd/matrix.hpp"

namespace optocsd {

/// n_s spatial modes, each carrying n_p internal modes. Composite basis
/// vector |s_k> (x) |p_l> (1-based k, l) sits at index (k-1)*n_p + (l-1).
struct ModeSpace {
  std::size_t n_s = 1;
  std::size_t n_p = 1;

  std::size_t dim() const noexcept { return n_s * n_p; }
  std::size_t index(std::size_t k, std::size_t l) const noexcept { return (k - 1) * n_p + (l - 1); }

  /// Throws DimensionError when either count is zero.
  void validate() const;

  friend bool operator==(const ModeSpace&, const ModeSpace&) = default;
};

/// Arbitrary n_p x n_p unitary on the internal modes of spatial mode k.
struct InternalOp {
  std::size_t spatial_index = 1;
  ComplexMatrix matrix;
  friend bool operator==(const InternalOp&, const InternalOp&) = default;
};

/// Balanced beamsplitter B_2 = (1/sqrt2)[[1, i], [i, 1]] (or its adjoint when
/// `conjugate`) on spatial modes (mode, mode + 1), identity on internal modes.
struct Beamsplitter {
  std::size_t mode = 1;
  bool conjugate = false;
  friend bool operator==(const Beamsplitter&, const Beamsplitter&) = default;
};

/// diag(exp(i phases)) on the internal modes of spatial mode k.
struct PhaseBlock {
  std::size_t spatial_index = 1;
  std::vector<double> phases;
  friend bool operator==(const PhaseBlock&, const PhaseBlock&) = default;
};

/// CS matrix S_{2 n_p}(thetas) on spatial modes (mode, mode + 1). Only
/// appears in stage-1 output.
struct CSBlock {
  std::size_t mode = 1;
  std::vector<double> thetas;
  friend bool operator==(const CSBlock&, const CSBlock&) = default;
};

using CircuitElement = std::variant<InternalOp, Beamsplitter, PhaseBlock, CSBlock>;

/// Elements in application order: elements.front() acts on the light first,
/// so the circuit's matrix is E_last ... E_2 E_1.
struct Circuit {
  ModeSpace space;
  std::vector<CircuitElement> elements;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Checks indices, shapes and unitarity of one element. Throws IndexError,
/// DimensionError, UnitarityError or NonFiniteError.
void validate_element(const CircuitElement& e, const ModeSpace& space,
                      double tol = kUnitarityTol);

void validate_circuit(const Circuit& c, double tol = kUnitarityTol);

/// Full n_s*n_p composite-basis matrix of one element.
ComplexMatrix embed(const CircuitElement& e, const ModeSpace& space);

/// m <- E m, touching only the rows the element acts on.
void apply_element(const CircuitElement& e, const ModeSpace& space, ComplexMatrix& m);

/// Product of all elements in operator order. Empty circuit gives identity.
ComplexMatrix reconstruct(const Circuit& c);

}  // namespace optocsd
