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

#include <stdexcept>
#include <string>

namespace optocsd {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes do not conform (matrix product, partition size, mode space).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be unitary is not, within the requested tolerance.
class UnitarityError : public Error {
 public:
  UnitarityError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}

  /// max-abs entry of (M^dagger M - I).
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// NaN or Inf where only finite values are allowed.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or document (matrix text format, circuit JSON schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unsupported circuit document format_version.
class VersionError : public Error {
 public:
  using Error::Error;
};

/// Spatial mode index outside 1..n_s, or a non-adjacent mode pair.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Operation not applicable to the given circuit (e.g. unexpanded CS blocks).
class StageError : public Error {
 public:
  using Error::Error;
};

}  // namespace optocsd
