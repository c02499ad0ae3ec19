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

#include <random>

#include "cvcond/quad_field.hpp"

namespace cvcond::testing {

// Small random rational p/q with |p| <= 12 and 1 <= q <= 9.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  return frac(num(rng), den(rng));
}

inline QuadScalar random_scalar(std::mt19937_64& rng, long d) {
  if (d == 0) return QuadScalar(random_rational(rng));
  return QuadScalar(random_rational(rng), random_rational(rng), Integer(d));
}

}  // namespace cvcond::testing
