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

#include <vector>

#include "optocsd/circuit.hpp"
#include "optocsd/matrix.hpp"

namespace optocsd {

/// Stage 1: iterated cosine-sine decomposition into InternalOp and CSBlock
/// elements, n_s^2 and n_s(n_s-1)/2 of them respectively.
///
/// Iteration j peels spatial mode j off the remaining (n_s+1-j) n_p
/// dimensional unitary: the unitary is CS-decomposed with m = n_p, the
/// bottom-left factor is CS-decomposed again, and so on down to a single
/// spatial mode. Every bottom-right factor acts on modes disjoint from the
/// CS blocks already emitted, so it commutes past them and is multiplied
/// into one accumulated unitary on modes j+1..n_s, which the next
/// iteration receives.
///
/// Throws DimensionError when u is not space.dim() square, UnitarityError
/// when u deviates from unitarity by more than tol.
Circuit decompose_stage1(const ComplexMatrix& u, const ModeSpace& space,
                         double tol = kUnitarityTol);

/// B^dagger on (k, k+1), Theta on k, Theta^dagger on k+1, B on (k, k+1).
std::vector<CircuitElement> expand_cs_block(const CSBlock& b);

/// Replaces every CSBlock of a stage-1 circuit by its expansion.
Circuit expand_circuit(const Circuit& stage1);

/// Full decomposition into InternalOp, PhaseBlock and Beamsplitter elements.
Circuit decompose(const ComplexMatrix& u, const ModeSpace& space, double tol = kUnitarityTol);

}  // namespace optocsd
