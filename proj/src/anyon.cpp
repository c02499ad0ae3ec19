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

#include "cvcond/anyon.hpp"

namespace cvcond {

QuadScalar spin_value(const FluxCharge& x) { return x.flux_hat * x.charge; }

QuadScalar braiding_value(const FluxCharge& x, const FluxCharge& y) {
  return x.flux_hat * y.charge + y.flux_hat * x.charge;
}

PhaseFraction spin(const FluxCharge& x) { return phase_reduce(spin_value(x)); }

PhaseFraction braiding(const FluxCharge& x, const FluxCharge& y) {
  return phase_reduce(braiding_value(x, y));
}

bool is_boson(const FluxCharge& x) { return spin(x).is_trivial(); }

FluxCharge exchange(const FluxCharge& x) { return {x.charge, x.flux_hat}; }

}  // namespace cvcond
