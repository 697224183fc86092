// Copyright 2026 the gsuzuki authors
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

namespace gs {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument: bad prime, bad degree, out-of-range index, ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between elements of different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Inversion of zero.
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Exact division requested but the remainder is nonzero.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// An L-polynomial input violates deg = 2g or L(0) = 1.
class MalformedPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Point counts that admit no integral L-polynomial.
class InconsistentCountsError : public Error {
 public:
  using Error::Error;
};

/// Matrix shape violation (e.g. charpoly of a non-square matrix).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A verified identity failed; indicates a bug, never user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was requested beyond the configured resource limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gs
