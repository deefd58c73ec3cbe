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

#include <iosfwd>
#include <string>

#include "optocsd/matrix.hpp"

namespace optocsd {

// Plain-text matrix format: a header line "rows cols" followed by
// rows*cols whitespace-separated complex entries written as "re+imj"
// (e.g. "0.5-0.25j"), row-major, 17 significant digits.

/// Formats one entry, e.g. "0.5-0.25j".
std::string format_complex(Complex z);

/// Parses one entry. Accepts "re+imj", "re-imj", a bare real "re" and a
/// bare imaginary "imj". Throws ParseError.
Complex parse_complex(const std::string& token);

void write_matrix(std::ostream& out, const ComplexMatrix& m);

/// Throws ParseError on malformed input or non-finite entries.
ComplexMatrix read_matrix(std::istream& in);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace optocsd
