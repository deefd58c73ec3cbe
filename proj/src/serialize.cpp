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

#include "optocsd/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "optocsd/error.hpp"

namespace optocsd {
namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

json angles_to_json(const std::vector<double>& v) { return json(v); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Complex& z : m.row(r)) row.push_back({z.real(), z.imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json element_to_json(const CircuitElement& e) {
  return std::visit(
      overloaded{
          [](const InternalOp& op) {
            return json{{"kind", "internal"},
                        {"spatial_index", op.spatial_index},
                        {"matrix", matrix_to_json(op.matrix)}};
          },
          [](const Beamsplitter& bs) {
            return json{{"kind", "beamsplitter"},
                        {"spatial_pair", {bs.mode, bs.mode + 1}},
                        {"conjugate", bs.conjugate}};
          },
          [](const PhaseBlock& pb) {
            return json{{"kind", "phase_block"},
                        {"spatial_index", pb.spatial_index},
                        {"phases", angles_to_json(pb.phases)}};
          },
          [](const CSBlock& cs) {
            return json{{"kind", "cs_block"},
                        {"spatial_pair", {cs.mode, cs.mode + 1}},
                        {"thetas", angles_to_json(cs.thetas)}};
          },
      },
      e);
}

[[noreturn]] void schema(const std::string& msg) { throw ParseError("circuit document: " + msg); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const json& j, const char* key) {
  if (!j.is_number_integer()) schema(std::string("\"") + key + "\" must be an integer");
  return j.get<long long>();
}

double number(const json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema(std::string(what) + " must be finite");
  return x;
}

std::size_t positive_count(const json& obj, const char* key) {
  const long long v = integer(field(obj, key), key);
  if (v < 1) schema(std::string("\"") + key + "\" must be >= 1");
  return static_cast<std::size_t>(v);
}

std::size_t spatial_index(const json& obj, const ModeSpace& space) {
  const long long k = integer(field(obj, "spatial_index"), "spatial_index");
  if (k < 1 || static_cast<std::size_t>(k) > space.n_s) {
    throw IndexError("spatial_index " + std::to_string(k) + " outside 1.." +
                     std::to_string(space.n_s));
  }
  return static_cast<std::size_t>(k);
}

std::size_t spatial_pair(const json& obj, const ModeSpace& space) {
  const json& pair = field(obj, "spatial_pair");
  if (!pair.is_array() || pair.size() != 2) schema("\"spatial_pair\" must be [k, k+1]");
  const long long k = integer(pair[0], "spatial_pair");
  const long long k2 = integer(pair[1], "spatial_pair");
  if (k2 != k + 1) {
    throw IndexError("spatial_pair [" + std::to_string(k) + ", " + std::to_string(k2) +
                     "] is not an adjacent pair");
  }
  if (k < 1 || static_cast<std::size_t>(k2) > space.n_s) {
    throw IndexError("spatial_pair [" + std::to_string(k) + ", " + std::to_string(k2) +
                     "] outside 1.." + std::to_string(space.n_s));
  }
  return static_cast<std::size_t>(k);
}

std::vector<double> angles(const json& obj, const char* key, const ModeSpace& space) {
  const json& arr = field(obj, key);
  if (!arr.is_array() || arr.size() != space.n_p) {
    schema(std::string("\"") + key + "\" must hold n_p = " + std::to_string(space.n_p) +
           " numbers");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& x : arr) out.push_back(number(x, key));
  return out;
}

ComplexMatrix matrix(const json& obj, const ModeSpace& space) {
  const json& rows = field(obj, "matrix");
  const std::size_t np = space.n_p;
  if (!rows.is_array() || rows.size() != np) schema("\"matrix\" must have n_p rows");
  std::vector<Complex> entries;
  entries.reserve(np * np);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != np) schema("\"matrix\" rows must have n_p entries");
    for (const json& z : row) {
      if (!z.is_array() || z.size() != 2) schema("matrix entries must be [re, im]");
      entries.emplace_back(number(z[0], "matrix entry"), number(z[1], "matrix entry"));
    }
  }
  return ComplexMatrix(np, np, std::move(entries));
}

CircuitElement element_from_json(const json& obj, const ModeSpace& space, double tol) {
  if (!obj.is_object()) schema("elements must be objects");
  const json& kind_j = field(obj, "kind");
  if (!kind_j.is_string()) schema("\"kind\" must be a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "internal") {
    InternalOp op{spatial_index(obj, space), matrix(obj, space)};
    require_unitary(op.matrix, tol, "internal op on mode " + std::to_string(op.spatial_index));
    return op;
  }
  if (kind == "beamsplitter") {
    const json& conj = field(obj, "conjugate");
    if (!conj.is_boolean()) schema("\"conjugate\" must be a boolean");
    return Beamsplitter{spatial_pair(obj, space), conj.get<bool>()};
  }
  if (kind == "phase_block") {
    return PhaseBlock{spatial_index(obj, space), angles(obj, "phases", space)};
  }
  if (kind == "cs_block") {
    return CSBlock{spatial_pair(obj, space), angles(obj, "thetas", space)};
  }
  schema("unknown element kind \"" + kind + "\"");
}

}  // namespace

std::string serialize(const Circuit& c) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["n_s"] = c.space.n_s;
  doc["n_p"] = c.space.n_p;
  json elements = json::array();
  for (const CircuitElement& e : c.elements) elements.push_back(element_to_json(e));
  doc["elements"] = std::move(elements);
  return doc.dump(1);
}

Circuit deserialize(const std::string& text, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("circuit document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("top level must be an object");

  const json& version = field(doc, "format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw VersionError("unsupported circuit format_version " + version.dump() +
                       " (supported: \"" + kFormatVersion + "\")");
  }

  Circuit c;
  c.space.n_s = positive_count(doc, "n_s");
  c.space.n_p = positive_count(doc, "n_p");
  const json& elements = field(doc, "elements");
  if (!elements.is_array()) schema("\"elements\" must be an array");
  c.elements.reserve(elements.size());
  for (const json& e : elements) c.elements.push_back(element_from_json(e, c.space, tol));
  return c;
}

Circuit load_circuit(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str(), tol);
}

void save_circuit(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write circuit file '" + path + "'");
  out << serialize(c) << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace optocsd
