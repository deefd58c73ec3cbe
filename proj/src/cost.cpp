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

#include "optocsd/cost.hpp"

#include <variant>

#include "optocsd/error.hpp"

namespace optocsd {
namespace {

void fill_derived(CostReport& r) {
  const std::size_t np = r.space.n_p;
  const std::size_t total = r.space.dim();
  r.internal_element_estimate = r.internal_arbitrary * np * np + r.internal_phase_blocks * np;
  r.reck_beamsplitters = total * (total - 1) / 2;
  r.reck_phase_shifters = total * (total + 1) / 2;
  r.eta.reset();
  r.xi.reset();
  if (r.space.n_s >= 2 && r.beamsplitters > 0) {
    r.eta = static_cast<double>(r.reck_beamsplitters) / static_cast<double>(r.beamsplitters);
    r.xi = static_cast<double>(r.internal_element_estimate) /
           static_cast<double>(r.reck_phase_shifters);
  }
}

}  // namespace

CostReport cost_report(const ModeSpace& space) {
  space.validate();
  CostReport r;
  r.space = space;
  r.beamsplitters = space.n_s * (space.n_s - 1);
  r.internal_arbitrary = space.n_s * space.n_s;
  r.internal_phase_blocks = space.n_s * (space.n_s - 1);
  fill_derived(r);
  return r;
}

CostReport audit_circuit(const Circuit& c) {
  c.space.validate();
  CostReport r;
  r.space = c.space;
  for (const CircuitElement& e : c.elements) {
    if (std::holds_alternative<CSBlock>(e)) {
      throw StageError("audit_circuit: circuit still contains CS blocks; expand it first");
    }
    if (std::holds_alternative<Beamsplitter>(e)) ++r.beamsplitters;
    if (std::holds_alternative<InternalOp>(e)) ++r.internal_arbitrary;
    if (std::holds_alternative<PhaseBlock>(e)) ++r.internal_phase_blocks;
  }
  fill_derived(r);
  return r;
}

PolarizationCounts polarization_counts(const CostReport& r) {
  if (r.space.n_p != 2) {
    throw DimensionError("polarization counts need n_p = 2, got " + std::to_string(r.space.n_p));
  }
  // Three wave plates per CS block, i.e. per pair of Theta blocks.
  return {r.beamsplitters, r.internal_arbitrary, 3 * r.internal_phase_blocks / 2};
}

}  // namespace optocsd
