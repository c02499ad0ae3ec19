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

#include <optional>
#include <string>
#include <vector>

#include "cvcond/anyon.hpp"
#include "cvcond/finite_anyon.hpp"
#include "cvcond/linalg.hpp"

namespace cvcond {

enum class SubgroupClass { Z, ZxZ, R, ZxR };
enum class HoppingBasis { SingleSite, Composite };

std::string to_string(SubgroupClass c);
std::string to_string(HoppingBasis b);

struct BosonSubgroup {
  std::vector<FluxCharge> generators;
  std::vector<bool> continuous;
  SubgroupClass subgroup_class = SubgroupClass::Z;
  HoppingBasis basis = HoppingBasis::SingleSite;
  long discriminant = 0;
  // Certificates.
  std::vector<QuadScalar> spins;     // f c per generator, unreduced
  std::optional<QuadScalar> cross;   // f0 c1 + f1 c0 for two generators
  bool cross_even = true;

  size_t rank() const { return generators.size(); }
  bool has_continuous() const;
};

BosonSubgroup validate_subgroup(const std::vector<FluxCharge>& generators,
                                const std::vector<bool>& continuous = {});

struct DeconfinedSet {
  std::vector<FluxCharge> discrete_generators;
  std::optional<FluxCharge> continuous_direction;
};

DeconfinedSet deconfined_set(const BosonSubgroup& B);

struct ContinuousFactor {
  bool compact = false;  // U(1) when true, R otherwise
  FluxCharge direction;
  QuadScalar self_pairing;     // b(t, t), unreduced
  std::optional<QuadScalar> period;  // alpha is taken mod this when compact
};

enum class CaseKind { Trivial, FluxOnly, Composite1, PureFluxCharge, Double, EvenK };

struct CondensationOutcome {
  BosonSubgroup B;
  DeconfinedSet A;
  CaseKind kind = CaseKind::Trivial;

  FiniteAnyonTheory finite_theory;
  std::vector<FluxCharge> finite_generators;  // coset representatives
  std::vector<FluxCharge> free_generators;    // Z factors (infinite order)
  std::optional<ContinuousFactor> continuous_factor;

  // Coset basis. For rank-2 cases: B generators in A coordinates, and the
  // map from A coordinates to cyclic labels (label = k * V mod orders).
  Mat<Integer> relation_matrix;
  std::vector<Integer> invariant_factors;
  Mat<Integer> label_transform;

  std::string classification_tag;
  std::string encoded_content;
  std::vector<std::string> warnings;

  bool is_finite() const { return free_generators.empty() && !continuous_factor; }
};

CondensationOutcome quotient(const DeconfinedSet& A, const BosonSubgroup& B);

// Canonical label: [k1, k2] for rank-2 cases, [q, alpha] with a continuous factor.
std::vector<QuadScalar> coset_normal_form(const FluxCharge& x, const CondensationOutcome& o);
// Representative of a label.
FluxCharge coset_representative(const std::vector<QuadScalar>& label, const CondensationOutcome& o);

struct Classification {
  std::string tag;
  std::string content;
};
Classification classify(const CondensationOutcome& o);

// Full pipeline: validate, deconfine, quotient, classify.
CondensationOutcome condense(const std::vector<FluxCharge>& generators,
                             const std::vector<bool>& continuous = {});

// Taxonomy shortcuts.
std::vector<FluxCharge> taxonomy_flux();
std::vector<FluxCharge> taxonomy_flux_charge(long n);
std::vector<FluxCharge> taxonomy_composite(long n);
std::vector<FluxCharge> taxonomy_double(long n, long m);
std::vector<FluxCharge> taxonomy_even_k(long n1, long n2, long np);

}  // namespace cvcond
