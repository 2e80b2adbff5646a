// Copyright 2026 The amalgam-lab Authors
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

#ifndef AMALGAM_ERROR_HPP
#define AMALGAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace amalgam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction was handed inputs that violate its precondition
/// (zero ring, non-ideal subset, foreign element, invalid homomorphism).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Two values living in different rings were combined.
class RingMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Exhaustive enumeration was requested on a ring above the configured
/// ceiling. This is a resource limit, not a mathematical failure.
class CeilingExceeded : public Error {
 public:
  CeilingExceeded(std::size_t order, std::size_t ceiling)
      : Error("ring of order " + std::to_string(order) +
              " exceeds the enumeration ceiling " + std::to_string(ceiling)),
        order_(order),
        ceiling_(ceiling) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t order_;
  std::size_t ceiling_;
};

/// A constructed certificate failed verification. Every combinator re-checks
/// its output, so this signals a counterexample to the construction.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace amalgam

#endif  // AMALGAM_ERROR_HPP
