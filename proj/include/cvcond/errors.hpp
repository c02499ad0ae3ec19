// Copyright 2019-2024 Cambridge Quantum Computing
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

namespace cvcond {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CVCOND_ERROR(Name)                                          \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

// exact-arith
CVCOND_ERROR(DivisionByZero)
CVCOND_ERROR(DiscriminantMismatch)
CVCOND_ERROR(ParseError)

// condensation-engine
CVCOND_ERROR(NonBoson)
CVCOND_ERROR(NontrivialMutualBraiding)
CVCOND_ERROR(OddCrossBraiding)
CVCOND_ERROR(DependentGenerators)
CVCOND_ERROR(BNotContained)
CVCOND_ERROR(NonIntegerRelationMatrix)
CVCOND_ERROR(Confined)
CVCOND_ERROR(Unclassified)

// finite-anyon-tools
CVCOND_ERROR(NondegenerateCheckFailed)

// lattice-model
CVCOND_ERROR(GeometryMismatch)
CVCOND_ERROR(NoPatternFound)
CVCOND_ERROR(NonMaximal)
CVCOND_ERROR(NotDiscrete)

// spectral
CVCOND_ERROR(NonIntegerEntry)
CVCOND_ERROR(NotPositiveDefinite)

// cli-report
CVCOND_ERROR(ConfigError)

#undef CVCOND_ERROR

}  // namespace cvcond
