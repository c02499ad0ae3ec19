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


#include <doctest.h>

#include <random>

#include "cvcond/condensation.hpp"
#include "cvcond/errors.hpp"

using namespace cvcond;

namespace {

FluxCharge fc(const char* f, const char* c) {
  return {QuadScalar::parse(f), QuadScalar::parse(c)};
}

std::vector<long> orders(const CondensationOutcome& o) { return o.finite_theory.cyclic_orders; }

// Coefficients of x in the basis (g0, g1) by Cramer's rule.
std::pair<QuadScalar, QuadScalar> coords(const FluxCharge& x, const FluxCharge& g0,
                                         const FluxCharge& g1) {
  QuadScalar det = g0.flux_hat * g1.charge - g1.flux_hat * g0.charge;
  QuadScalar a = (x.flux_hat * g1.charge - g1.flux_hat * x.charge) / det;
  QuadScalar b = (g0.flux_hat * x.charge - x.flux_hat * g0.charge) / det;
  return {a, b};
}

bool in_lattice(const FluxCharge& x, const std::vector<FluxCharge>& B) {
  if (B.size() == 1) {
    const auto& g = B[0];
    QuadScalar k = g.flux_hat.is_zero() ? x.charge / g.charge : x.flux_hat / g.flux_hat;
    return k.is_integer() && k * g.flux_hat == x.flux_hat && k * g.charge == x.charge;
  }
  auto [a, b] = coords(x, B[0], B[1]);
  return a.is_integer() && b.is_integer();
}

}  // namespace

TEST_CASE("validate_subgroup") {
  auto B = validate_subgroup({fc("1", "2")});
  CHECK(B.subgroup_class == SubgroupClass::Z);
  auto B2 = validate_subgroup({fc("1", "1"), fc("-sqrt(2)", "sqrt(2)")});
  CHECK(B2.subgroup_class == SubgroupClass::ZxZ);
  REQUIRE(B2.cross.has_value());
  CHECK(B2.cross->is_zero());
  CHECK(B2.cross_even);
  CHECK(B2.discriminant == 2);
  CHECK_THROWS_AS(validate_subgroup({fc("1/2", "1")}), NonBoson);
  CHECK_THROWS_AS(validate_subgroup({fc("1", "0"), fc("0", "1/2")}), NontrivialMutualBraiding);
  CHECK_THROWS_AS(validate_subgroup({fc("1", "1"), fc("0", "1")}), OddCrossBraiding);
  CHECK_THROWS_AS(validate_subgroup({fc("1", "1"), fc("2", "2")}), DependentGenerators);
  // Odd cross forms are fine for pure generators.
  CHECK_NOTHROW(validate_subgroup({fc("1", "0"), fc("0", "1")}));
}

TEST_CASE("deconfined sets") {
  auto A = deconfined_set(validate_subgroup({fc("1", "0")}));
  REQUIRE(A.continuous_direction.has_value());
  CHECK(*A.continuous_direction == fc("1", "0"));
  CHECK(A.discrete_generators == std::vector<FluxCharge>{fc("0", "1")});

  auto A3 = deconfined_set(validate_subgroup({fc("1", "3")}));
  CHECK(*A3.continuous_direction == fc("1", "-3"));
  CHECK(A3.discrete_generators == std::vector<FluxCharge>{fc("0", "1")});

  auto B = validate_subgroup(taxonomy_double(1, 2));
  auto Ad = deconfined_set(B);
  CHECK_FALSE(Ad.continuous_direction.has_value());
  CHECK(Ad.discrete_generators.size() == 2);
  for (const auto& a : Ad.discrete_generators)
    for (const auto& g : B.generators) CHECK(braiding(a, g).is_trivial());
}

TEST_CASE("condensed theories of the taxonomy") {
  auto flux = condense(taxonomy_flux());
  CHECK(flux.continuous_factor.has_value());
  CHECK(flux.continuous_factor->compact);
  CHECK(flux.free_generators.size() == 1);
  CHECK(orders(flux).empty());

  for (long n : {2L, 3L, 5L}) {
    auto o = condense(taxonomy_flux_charge(n));
    CHECK(orders(o) == std::vector<long>{n, n});
    CHECK(o.is_finite());
  }
  for (long n : {1L, 2L, 3L}) {
    auto o = condense(taxonomy_composite(n));
    CHECK(orders(o) == std::vector<long>{2 * n});
    REQUIRE(o.continuous_factor.has_value());
    CHECK_FALSE(o.continuous_factor->compact);
  }
  for (auto [n, m] : {std::pair{1L, 2L}, {2L, 3L}, {1L, 1L}}) {
    auto o = condense(taxonomy_double(n, m));
    CHECK(o.finite_theory.order() == 4 * n * m);
  }
  CHECK(orders(condense(taxonomy_double(1, 2))) == std::vector<long>{2, 4});
}

TEST_CASE("even-K relation matrix and invariant factors") {
  auto o = condense(taxonomy_even_k(1, 1, 2));
  Mat<Integer> want = {{2, 4}, {4, 2}};
  CHECK(o.relation_matrix == want);
  CHECK(orders(o) == std::vector<long>{2, 6});
  for (auto [n1, n2, np] : {std::tuple{1L, 1L, 2L}, {1L, 2L, 2L}, {2L, 2L, 3L}}) {
    auto e = condense(taxonomy_even_k(n1, n2, np));
    CHECK(e.finite_theory.order() == 4 * (np * np - n1 * n2));
    Integer det = det_bareiss(e.relation_matrix);
    CHECK(abs(det) == e.finite_theory.order());
  }
}

TEST_CASE("generator spins of the double family") {
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) {
      auto o = condense(taxonomy_double(n, m));
      const auto& s = o.finite_theory.generator_spins;
      REQUIRE(s.size() == 2);
      CHECK(s[0] == phase_reduce(QuadScalar(frac(1, 4 * n))));
      CHECK(s[1] == phase_reduce(QuadScalar(frac(-1, 4 * m))));
      CHECK(o.finite_theory.braiding_matrix[0][1].is_trivial());
    }
}

TEST_CASE("coset normal form examples") {
  auto o = condense(taxonomy_composite(1));
  auto l = coset_normal_form(fc("3", "-1"), o);
  CHECK(l == std::vector<QuadScalar>{0, 2});
  CHECK(coset_normal_form(fc("0", "0"), o) == std::vector<QuadScalar>{0, 0});
  CHECK(coset_normal_form(fc("1", "1"), o) == std::vector<QuadScalar>{0, 0});
  CHECK_THROWS_AS(coset_normal_form(fc("1/4", "0"), o), Confined);
}

TEST_CASE("classification tags") {
  CHECK(classify(condense(taxonomy_flux())).tag == "homological-rotor / U(1) gauge theory");
  CHECK(classify(condense(taxonomy_flux())).content == "two quantum rotors");
  CHECK(classify(condense(taxonomy_composite(2))).tag == "U(1)_4");
  CHECK(classify(condense(taxonomy_double(1, 2))).tag == "U(1)_2 x U(1)_-4");
  CHECK(classify(condense(taxonomy_flux_charge(3))).tag == "Z_3 gauge theory (toric-GKP)");
}

TEST_CASE("normal form idempotence and B-difference on random deconfined elements") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> k(-6, 6);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);

  for (auto gens : {taxonomy_double(1, 2), taxonomy_double(2, 3), taxonomy_even_k(1, 1, 2),
                    taxonomy_even_k(2, 2, 3), taxonomy_flux_charge(3)}) {
    auto o = condense(gens);
    for (int t = 0; t < 400; ++t) {
      FluxCharge x;
      for (const auto& a : o.A.discrete_generators) x += QuadScalar(k(rng)) * a;
      auto label = coset_normal_form(x, o);
      FluxCharge rep = coset_representative(label, o);
      REQUIRE(coset_normal_form(rep, o) == label);
      REQUIRE(in_lattice(x - rep, gens));
      for (const auto& g : gens) REQUIRE(coset_normal_form(x + g, o) == label);
      // Descended braiding does not depend on the representative.
      for (const auto& g : gens)
        for (const auto& a : o.A.discrete_generators)
          REQUIRE(braiding(rep + g, a) == braiding(rep, a));
    }
  }

  for (long n : {1L, 2L, 3L}) {
    auto gens = taxonomy_composite(n);
    auto o = condense(gens);
    const FluxCharge& t = o.continuous_factor->direction;
    for (int s = 0; s < 400; ++s) {
      FluxCharge x = QuadScalar(k(rng)) * o.A.discrete_generators[0] +
                     QuadScalar(frac(num(rng), den(rng))) * t;
      auto label = coset_normal_form(x, o);
      FluxCharge rep = coset_representative(label, o);
      REQUIRE(coset_normal_form(rep, o) == label);
      REQUIRE(in_lattice(x - rep, gens));
      REQUIRE(label[0].is_integer());
      REQUIRE(label[0] >= 0);
      REQUIRE(label[0] < QuadScalar(2 * n));
    }
  }
}
