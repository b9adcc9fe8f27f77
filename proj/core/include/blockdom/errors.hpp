// Copyright 2026 The blockdom Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockdom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when an LU pivot falls below tolerance, or when a named
/// recurrence step needs the inverse of a singular block.
class SingularError : public Error {
 public:
  SingularError(std::size_t pivot_index, std::string step = {})
      : Error(Describe(pivot_index, step)),
        pivot_index_(pivot_index),
        step_(std::move(step)) {}

  std::size_t pivot_index() const noexcept { return pivot_index_; }
  const std::string& step() const noexcept { return step_; }

 private:
  static std::string Describe(std::size_t pivot, const std::string& step) {
    std::string msg = "singular matrix (pivot " + std::to_string(pivot) + ")";
    if (!step.empty()) msg = step + ": " + msg;
    return msg;
  }

  std::size_t pivot_index_;
  std::string step_;
};

/// A value left the finite range (NaN/Inf or recurrence growth guard).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A diagonal dominance hypothesis needed by the bound recurrences fails.
class DominanceViolation : public Error {
 public:
  DominanceViolation(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

  /// 1-based block row index.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Malformed or schema-violating matrix file.
class FormatError : public Error {
 public:
  FormatError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace blockdom
