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

#include "optocsd/decompose.hpp"

#include <algorithm>

#include "optocsd/csd.hpp"
#include "optocsd/error.hpp"

namespace optocsd {
namespace {

// Factors fed back into csd() are products of computed unitaries; allow
// them to drift further than user input before rejecting them.
constexpr double kInternalTol = 1e-8;

// One iteration on the unitary `v` acting on spatial modes first..n_s.
// Appends this iteration's elements in application order to `out` and
// returns the accumulated remainder acting on modes first+1..n_s.
ComplexMatrix peel_mode(const ComplexMatrix& v, std::size_t first, const ModeSpace& space,
                        std::vector<CircuitElement>& out) {
  const std::size_t np = space.n_p;
  const std::size_t n_s = space.n_s;

  // Operator order (leftmost first): heads, then the (CS, R^dagger) pairs
  // for modes n_s-1 down to first, then the remainder.
  std::vector<CircuitElement> heads;   // L factors, modes first..n_s
  std::vector<CircuitElement> middle;  // application order: R^dagger, S for mode first, first+1, ...

  CSDResult f = csd(v, np, kInternalTol);
  heads.push_back(InternalOp{first, f.left_top});
  middle.push_back(InternalOp{first, f.right_top.adjoint()});
  middle.push_back(CSBlock{first, f.thetas});
  ComplexMatrix remainder = f.right_bottom.adjoint();
  ComplexMatrix left = std::move(f.left_bottom);

  for (std::size_t t = first + 1; t < n_s; ++t) {
    CSDResult g = csd(left, np, kInternalTol);
    heads.push_back(InternalOp{t, g.left_top});
    // R^dagger on mode t sits between S on (t, t+1) and S on (t-1, t).
    middle.push_back(InternalOp{t, g.right_top.adjoint()});
    middle.push_back(CSBlock{t, g.thetas});
    // R'^dagger acts on modes t+1..n_s; inside the remainder's space
    // (modes first+1..n_s) that is an offset of (t - first) spatial modes.
    const std::size_t offset = (t - first) * np;
    ComplexMatrix lifted = ComplexMatrix::identity(remainder.rows());
    lifted.set_block(offset, offset, g.right_bottom.adjoint());
    remainder = lifted * remainder;
    left = std::move(g.left_bottom);
  }
  heads.push_back(InternalOp{n_s, std::move(left)});

  // middle was collected from the right end of the product towards the
  // left, which is already application order; heads are leftmost in the
  // product, so they are applied last and in reverse.
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), heads.rbegin(), heads.rend());
  return remainder;
}

}  // namespace

Circuit decompose_stage1(const ComplexMatrix& u, const ModeSpace& space, double tol) {
  space.validate();
  if (!u.square() || u.rows() != space.dim()) {
    throw DimensionError("decompose: input " + u.shape() + " does not match n_s*n_p = " +
                         std::to_string(space.n_s) + "*" + std::to_string(space.n_p));
  }
  require_unitary(u, tol, "decompose input");

  Circuit circuit{space, {}};
  if (space.n_s == 1) {
    circuit.elements.push_back(InternalOp{1, u});
    return circuit;
  }

  // The remainder of iteration j is the rightmost factor of the product,
  // so its elements act first: iteration groups are emitted in reverse.
  std::vector<std::vector<CircuitElement>> groups;
  ComplexMatrix current = u;
  for (std::size_t j = 1; j < space.n_s; ++j) {
    std::vector<CircuitElement> group;
    current = peel_mode(current, j, space, group);
    groups.push_back(std::move(group));
  }
  circuit.elements.push_back(InternalOp{space.n_s, std::move(current)});
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    circuit.elements.insert(circuit.elements.end(), it->begin(), it->end());
  }
  return circuit;
}

std::vector<CircuitElement> expand_cs_block(const CSBlock& b) {
  std::vector<double> negated(b.thetas.size());
  std::transform(b.thetas.begin(), b.thetas.end(), negated.begin(), [](double t) { return -t; });
  return {
      Beamsplitter{b.mode, true},
      PhaseBlock{b.mode, b.thetas},
      PhaseBlock{b.mode + 1, std::move(negated)},
      Beamsplitter{b.mode, false},
  };
}

Circuit expand_circuit(const Circuit& stage1) {
  Circuit out{stage1.space, {}};
  out.elements.reserve(stage1.elements.size() * 2);
  for (const CircuitElement& e : stage1.elements) {
    if (const auto* cs = std::get_if<CSBlock>(&e)) {
      auto parts = expand_cs_block(*cs);
      out.elements.insert(out.elements.end(), parts.begin(), parts.end());
    } else {
      out.elements.push_back(e);
    }
  }
  return out;
}

Circuit decompose(const ComplexMatrix& u, const ModeSpace& space, double tol) {
  return expand_circuit(decompose_stage1(u, space, tol));
}

}  // namespace optocsd
