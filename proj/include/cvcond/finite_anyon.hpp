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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvcond/quad_field.hpp"

namespace cvcond {

/// Abelian anyon theory on a product of cyclic groups.
struct FiniteAnyonTheory {
  std::vector<long> cyclic_orders;
  std::vector<PhaseFraction> generator_spins;
  std::vector<std::vector<PhaseFraction>> braiding_matrix;

  long order() const;
  // Checks order(g_i) * b(g_i, g_j) = 0 and b(g_i, g_i) = 2 s(g_i).
  bool well_defined() const;
  // Stacks two theories.
  static FiniteAnyonTheory product(const FiniteAnyonTheory& a, const FiniteAnyonTheory& b);
};

using AnyonLabel = std::vector<long>;

struct AnyonEntry {
  AnyonLabel label;
  PhaseFraction spin;
};

PhaseFraction anyon_spin(const FiniteAnyonTheory& t, const AnyonLabel& a);
PhaseFraction anyon_braiding(const FiniteAnyonTheory& t, const AnyonLabel& a, const AnyonLabel& b);

std::vector<AnyonEntry> enumerate_anyons(const FiniteAnyonTheory& t);

/// A subgroup given by its elements, as labels in enumeration order.
struct Subgroup {
  std::vector<AnyonLabel> elements;
  std::vector<AnyonLabel> generators;
};

std::vector<Subgroup> lagrangian_subgroups(const FiniteAnyonTheory& t);
bool is_lagrangian(const FiniteAnyonTheory& t, const std::vector<AnyonLabel>& elements);

struct CentralCharge {
  bool degenerate = false;
  int c_minus_mod8 = 0;
  double modulus = 0;
  bool exact = false;  // true when evaluated in cyclotomic arithmetic
};

CentralCharge gauss_sum_central_charge(const FiniteAnyonTheory& t);

// Convenience constructors for common data.
FiniteAnyonTheory toric_code_theory(long n);
FiniteAnyonTheory cyclic_theory(long order, const PhaseFraction& spin);

}  // namespace cvcond
