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

#include <string>

#include "cvcond/quad_field.hpp"

namespace cvcond {

/// Excitation label of the R gauge theory. Flux is stored in units of 2*pi.
struct FluxCharge {
  QuadScalar flux_hat;
  QuadScalar charge;

  FluxCharge() = default;
  FluxCharge(QuadScalar f, QuadScalar c) : flux_hat(std::move(f)), charge(std::move(c)) {}

  FluxCharge operator-() const { return {-flux_hat, -charge}; }
  FluxCharge& operator+=(const FluxCharge& o) {
    flux_hat += o.flux_hat;
    charge += o.charge;
    return *this;
  }
  friend FluxCharge operator+(FluxCharge x, const FluxCharge& y) { return x += y; }
  friend FluxCharge operator-(FluxCharge x, const FluxCharge& y) { return x += -y; }
  friend FluxCharge operator*(const QuadScalar& k, const FluxCharge& x) {
    return {k * x.flux_hat, k * x.charge};
  }
  friend bool operator==(const FluxCharge& x, const FluxCharge& y) = default;

  bool is_zero() const { return flux_hat.is_zero() && charge.is_zero(); }
  bool is_pure() const { return flux_hat.is_zero() || charge.is_zero(); }
  std::string str() const { return "(" + flux_hat.str() + ", " + charge.str() + ")"; }
};

// Unreduced forms, used wherever exact values matter.
QuadScalar spin_value(const FluxCharge& x);                          // f c
QuadScalar braiding_value(const FluxCharge& x, const FluxCharge& y);  // f c' + f' c

PhaseFraction spin(const FluxCharge& x);
PhaseFraction braiding(const FluxCharge& x, const FluxCharge& y);
bool is_boson(const FluxCharge& x);

// Swaps the roles of flux and charge. Used only to normalize inputs.
FluxCharge exchange(const FluxCharge& x);

}  // namespace cvcond
