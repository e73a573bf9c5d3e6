// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_ERRORS_H_
#define FAIRDIV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairdiv {

// Bad argument from the caller: index out of range, malformed parameter,
// missing table entry. Maps to CLI exit code 1.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A documented precondition was violated (e.g. a bundle that must be
// independent is not). Maps to CLI exit code 1.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

// The request is outside what the implementation supports: instance too
// large for a brute-force routine, fast path demanded for a valuation class
// that has none. Maps to CLI exit code 2.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// Input text (instance or allocation file) failed to parse or validate.
// Maps to CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check against an independent oracle disagreed with the fast path.
// Maps to CLI exit code 3.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

// An invariant the algorithms guarantee by construction failed at runtime.
// Always signals an implementation bug, never bad input.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_H_
