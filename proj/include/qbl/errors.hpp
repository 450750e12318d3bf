// Copyright 2026 The qudit-bound-lab Authors
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

namespace qbl {

/// A precondition of a public operation was not met (non-unitary input,
/// dimension mismatch, unnormalized weights, ...).
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The coefficient matrix has |det M| below the singularity threshold, so the
/// phase and special-unitary sectors are not uniquely defined.
class SingularCoefficientMatrix : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Operation is only defined for some dimensions (concurrence needs d = 2,
/// the rxrz strategy needs d = 2, the grid oracle needs d <= 4).
class UnsupportedDimension : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ContractViolation(message);
    }
}

}  // namespace qbl
