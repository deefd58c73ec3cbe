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

#include "optocsd/matrix_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "optocsd/error.hpp"

namespace optocsd {
namespace {

// strtod on the prefix of s starting at pos; advances pos.
bool read_double(const std::string& s, std::size_t& pos, double& value) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  errno = 0;
  value = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) return false;
  pos += static_cast<std::size_t>(end - begin);
  return true;
}

}  // namespace

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

Complex parse_complex(const std::string& token) {
  auto fail = [&]() -> Complex { throw ParseError("bad complex entry '" + token + "'"); };
  if (token.empty()) return fail();

  std::size_t pos = 0;
  double first = 0.0;
  if (!read_double(token, pos, first)) return fail();
  if (pos == token.size()) {
    if (!std::isfinite(first)) return fail();
    return {first, 0.0};
  }
  if (token[pos] == 'j' && pos + 1 == token.size()) {
    if (!std::isfinite(first)) return fail();
    return {0.0, first};
  }
  if (token[pos] != '+' && token[pos] != '-') return fail();
  double second = 0.0;
  if (!read_double(token, pos, second)) return fail();
  if (pos + 1 != token.size() || token[pos] != 'j') return fail();
  if (!std::isfinite(first) || !std::isfinite(second)) return fail();
  return {first, second};
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hs(header);
  long long rows = 0;
  long long cols = 0;
  std::string extra;
  if (!(hs >> rows >> cols) || (hs >> extra) || rows <= 0 || cols <= 0) {
    throw ParseError("matrix header must be 'rows cols' with positive integers, got '" +
                     header + "'");
  }
  const auto count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  std::vector<Complex> entries;
  entries.reserve(count);
  std::string token;
  while (in >> token) {
    if (entries.size() == count) {
      throw ParseError("matrix body has more than " + std::to_string(count) + " entries");
    }
    entries.push_back(parse_complex(token));
  }
  if (entries.size() != count) {
    throw ParseError("matrix body has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(count));
  }
  return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                       std::move(entries));
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file '" + path + "'");
  write_matrix(out, m);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace optocsd
