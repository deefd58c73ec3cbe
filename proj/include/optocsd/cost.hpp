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
#include <optional>

#include "optocsd/circuit.hpp"

namespace optocsd {

/// Element counts of a decomposition and their comparison with a
/// spatial-modes-only (Reck-style) mesh on n_s*n_p modes.
struct CostReport {
  ModeSpace space;
  std::size_t beamsplitters = 0;
  std::size_t internal_arbitrary = 0;     // n_p x n_p InternalOps
  std::size_t internal_phase_blocks = 0;  // diagonal Theta blocks
  // Optical elements for the internal transformations: n_p^2 per arbitrary
  // op, n_p per Theta block.
  std::size_t internal_element_estimate = 0;
  std::size_t reck_beamsplitters = 0;   // N(N-1)/2 with N = n_s n_p
  std::size_t reck_phase_shifters = 0;  // N(N+1)/2
  std::optional<double> eta;  // reck_beamsplitters / beamsplitters; unset for n_s = 1
  std::optional<double> xi;   // internal_element_estimate / reck_phase_shifters; unset for n_s = 1

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Closed-form counts for a full decomposition on `space`.
CostReport cost_report(const ModeSpace& space);

/// Tallies the elements of an expanded circuit. Throws StageError if the
/// circuit still holds CSBlocks.
CostReport audit_circuit(const Circuit& c);

/// Polarization (n_p = 2) bill of materials.
struct PolarizationCounts {
  std::size_t balanced_beamsplitters = 0;  // n(n-1)
  std::size_t phase_shifters = 0;          // n^2
  std::size_t wave_plates = 0;             // 3n(n-1)/2
};

/// Only meaningful for reports with n_p = 2; throws DimensionError otherwise.
PolarizationCounts polarization_counts(const CostReport& r);

}  // namespace optocsd
