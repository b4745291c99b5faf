// Copyright 2026 The qig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qig {

/// Base class for all qig errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A domain-type invariant was violated (non-Hermitian state, incomplete
/// measurement, dimension mismatch, ...). The message names the invariant
/// and the offending residual.
class invariant_error : public error {
 public:
  explicit invariant_error(const std::string& what) : error(what) {}
};

/// A conditional quantity was requested for an outcome of probability ~0.
class impossible_outcome_error : public error {
 public:
  explicit impossible_outcome_error(const std::string& what) : error(what) {}
};

/// A matrix that must be invertible (S in a whitening step) is singular.
class singular_error : public error {
 public:
  explicit singular_error(const std::string& what) : error(what) {}
};

/// Malformed input file: wrong JSON shape, missing field, bad value.
class schema_error : public error {
 public:
  explicit schema_error(const std::string& what) : error(what) {}
};

/// Filesystem failure (unreadable input, unwritable output).
class io_error : public error {
 public:
  explicit io_error(const std::string& what) : error(what) {}
};

/// Short scientific rendering of a residual for error messages.
inline std::string num_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace qig
