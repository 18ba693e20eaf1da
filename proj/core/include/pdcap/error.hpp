// Copyright 2026 The pdcap Authors
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

#include <stdexcept>
#include <string>

namespace pdcap {

// Argument outside the mathematical domain of an operation (p > 1, N = 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shapes that do not fit together: non-square input, dims that do not
// multiply out, a state of the wrong size for a channel.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violated a named invariant by a measurable amount.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string invariant, double deviation, const std::string& what)
      : std::invalid_argument(what), invariant_(std::move(invariant)), deviation_(deviation) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::string invariant_;
  double deviation_;
};

// Malformed channel or configuration document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdcap
