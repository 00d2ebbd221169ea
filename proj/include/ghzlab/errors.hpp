// Copyright 2026 The ghzlab Authors
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

namespace ghzlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: state files, correlation tables, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An expectation value carried an imaginary part >= 1e-10.
class ImaginaryResidual : public Error {
 public:
  using Error::Error;
};

class VisibilityOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class ToleranceOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class MalformedTable : public InputError {
 public:
  using InputError::InputError;
};

/// A Mermin point with radius^2 above 16; the state that produced it was
/// not a valid quantum state.
class PointOutsideQuantumRegion : public Error {
 public:
  using Error::Error;
};

/// Random-restart ascent did not reach the analytic maximum.
class RestartBudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Even full visibility does not violate the requested bound.
class NoViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ghzlab
