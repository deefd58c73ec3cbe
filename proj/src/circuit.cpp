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

#include "optocsd/circuit.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "optocsd/error.hpp"

namespace optocsd {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_mode(std::size_t k, const ModeSpace& space, const char* what) {
  if (k < 1 || k > space.n_s) {
    throw IndexError(std::string(what) + ": spatial index " + std::to_string(k) +
                     " outside 1.." + std::to_string(space.n_s));
  }
}

void check_pair(std::size_t k, const ModeSpace& space, const char* what) {
  if (k < 1 || k + 1 > space.n_s) {
    throw IndexError(std::string(what) + ": spatial pair (" + std::to_string(k) + "," +
                     std::to_string(k + 1) + ") outside 1.." + std::to_string(space.n_s));
  }
}

void check_angles(const std::vector<double>& v, const ModeSpace& space, const char* what) {
  if (v.size() != space.n_p) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(space.n_p) +
                         " angles, got " + std::to_string(v.size()));
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw NonFiniteError(std::string(what) + ": non-finite angle");
  }
}

// Rows a and b of m mixed by the 2x2 matrix [[t00, t01], [t10, t11]].
void mix_rows(ComplexMatrix& m, std::size_t a, std::size_t b, Complex t00, Complex t01,
              Complex t10, Complex t11) {
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Complex x = ra[j];
    const Complex y = rb[j];
    ra[j] = t00 * x + t01 * y;
    rb[j] = t10 * x + t11 * y;
  }
}

}  // namespace

void ModeSpace::validate() const {
  if (n_s == 0 || n_p == 0) {
    throw DimensionError("mode space needs n_s >= 1 and n_p >= 1, got n_s = " +
                         std::to_string(n_s) + ", n_p = " + std::to_string(n_p));
  }
}

void validate_element(const CircuitElement& e, const ModeSpace& space, double tol) {
  std::visit(overloaded{
                 [&](const InternalOp& op) {
                   check_mode(op.spatial_index, space, "internal op");
                   if (op.matrix.rows() != space.n_p || op.matrix.cols() != space.n_p) {
                     throw DimensionError("internal op on mode " +
                                          std::to_string(op.spatial_index) + " is " +
                                          op.matrix.shape() + ", expected " +
                                          std::to_string(space.n_p) + "x" +
                                          std::to_string(space.n_p));
                   }
                   require_unitary(op.matrix, tol,
                                   "internal op on mode " + std::to_string(op.spatial_index));
                 },
                 [&](const Beamsplitter& bs) { check_pair(bs.mode, space, "beamsplitter"); },
                 [&](const PhaseBlock& pb) {
                   check_mode(pb.spatial_index, space, "phase block");
                   check_angles(pb.phases, space, "phase block");
                 },
                 [&](const CSBlock& cs) {
                   check_pair(cs.mode, space, "cs block");
                   check_angles(cs.thetas, space, "cs block");
                 },
             },
             e);
}

void validate_circuit(const Circuit& c, double tol) {
  c.space.validate();
  for (const CircuitElement& e : c.elements) validate_element(e, c.space, tol);
}

void apply_element(const CircuitElement& e, const ModeSpace& space, ComplexMatrix& m) {
  const std::size_t np = space.n_p;
  std::visit(
      overloaded{
          [&](const InternalOp& op) {
            const std::size_t base = (op.spatial_index - 1) * np;
            m.set_block(base, 0, op.matrix * m.block(base, 0, np, m.cols()));
          },
          [&](const Beamsplitter& bs) {
            const double h = 1.0 / std::numbers::sqrt2;
            const Complex off(0.0, bs.conjugate ? -h : h);
            for (std::size_t l = 0; l < np; ++l) {
              const std::size_t a = (bs.mode - 1) * np + l;
              mix_rows(m, a, a + np, h, off, off, h);
            }
          },
          [&](const PhaseBlock& pb) {
            const std::size_t base = (pb.spatial_index - 1) * np;
            for (std::size_t l = 0; l < np; ++l) {
              const Complex f = std::polar(1.0, pb.phases[l]);
              for (Complex& z : m.row(base + l)) z *= f;
            }
          },
          [&](const CSBlock& cs) {
            for (std::size_t l = 0; l < np; ++l) {
              const std::size_t a = (cs.mode - 1) * np + l;
              const double c = std::cos(cs.thetas[l]);
              const double s = std::sin(cs.thetas[l]);
              mix_rows(m, a, a + np, c, s, -s, c);
            }
          },
      },
      e);
}

ComplexMatrix embed(const CircuitElement& e, const ModeSpace& space) {
  validate_element(e, space, std::numeric_limits<double>::infinity());
  ComplexMatrix m = ComplexMatrix::identity(space.dim());
  apply_element(e, space, m);
  return m;
}

ComplexMatrix reconstruct(const Circuit& c) {
  ComplexMatrix m = ComplexMatrix::identity(c.space.dim());
  for (const CircuitElement& e : c.elements) apply_element(e, c.space, m);
  return m;
}

}  // namespace optocsd
