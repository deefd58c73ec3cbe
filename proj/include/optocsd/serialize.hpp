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

#include <string>

#include "optocsd/circuit.hpp"

namespace optocsd {

/// Circuit document version written by serialize() and the only one accepted.
inline constexpr const char* kFormatVersion = "1";

/// JSON circuit document:
///
///   {"format_version": "1", "n_s": 2, "n_p": 2, "elements": [
///     {"kind": "internal", "spatial_index": 1, "matrix": [[[re, im], ...], ...]},
///     {"kind": "beamsplitter", "spatial_pair": [1, 2], "conjugate": true},
///     {"kind": "phase_block", "spatial_index": 1, "phases": [...]},
///     {"kind": "cs_block", "spatial_pair": [1, 2], "thetas": [...]}]}
///
/// Elements are listed in application order. Doubles are written with
/// round-trip precision.
std::string serialize(const Circuit& c);

/// Parses and validates a circuit document. Errors: ParseError (malformed
/// JSON or schema violation), VersionError, IndexError, UnitarityError.
Circuit deserialize(const std::string& doc, double tol = kUnitarityTol);

Circuit load_circuit(const std::string& path, double tol = kUnitarityTol);
void save_circuit(const std::string& path, const Circuit& c);

}  // namespace optocsd
