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

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "cvcond/condensation.hpp"
#include "cvcond/errors.hpp"
#include "cvcond/finite_anyon.hpp"

using namespace cvcond;

namespace {

PhaseFraction ph(long p, long q) { return PhaseFraction(QuadScalar(frac(p, q))); }

// Direct evaluation of the normalized Gauss sum in long double.
std::complex<long double> gauss_oracle(const FiniteAnyonTheory& t) {
  std::complex<long double> s = 0;
  for (const auto& a : enumerate_anyons(t)) {
    long double th = 2 * std::numbers::pi_v<long double> * a.spin.value().to_long_double();
    s += std::polar(1.0L, th);
  }
  return s / std::sqrt(static_cast<long double>(t.order()));
}

int c_mod8_oracle(const FiniteAnyonTheory& t) {
  auto g = gauss_oracle(t);
  long double c = std::arg(g) / (2 * std::numbers::pi_v<long double>) * 8;
  long r = std::lround(c);
  return static_cast<int>(((r % 8) + 8) % 8);
}

// Re-checks the defining conditions without touching the search code.
bool verify_lagrangian(const FiniteAnyonTheory& t, const std::vector<AnyonLabel>& L) {
  std::set<AnyonLabel> S(L.begin(), L.end());
  if (static_cast<long>(S.size() * S.size()) != t.order()) return false;
  const auto& ord = t.cyclic_orders;
  for (const auto& a : L) {
    if (!anyon_spin(t, a).is_trivial()) return false;
    for (const auto& b : L) {
      AnyonLabel c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % ord[i];
      if (!S.count(c)) return false;
    }
  }
  long centralizer = 0;
  for (const auto& e : enumerate_anyons(t)) {
    bool ok = true;
    for (const auto& b : L) ok = ok && anyon_braiding(t, e.label, b).is_trivial();
    centralizer += ok;
  }
  return centralizer == static_cast<long>(S.size());
}

long divisor_count(long n) {
  long c = 0;
  for (long d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_CASE("enumeration and spins") {
  auto t = toric_code_theory(2);
  auto all = enumerate_anyons(t);
  CHECK(all.size() == 4);
  CHECK(t.well_defined());
  CHECK(anyon_spin(t, {1, 1}) == ph(1, 2));
  CHECK(anyon_braiding(t, {1, 0}, {0, 1}) == ph(1, 2));
  auto u2 = cyclic_theory(2, ph(1, 4));
  CHECK(u2.well_defined());
  CHECK(anyon_spin(u2, {1}) == ph(1, 4));
  CHECK_FALSE(cyclic_theory(3, ph(1, 4)).well_defined());
}

TEST_CASE("toric code Lagrangian subgroups") {
  for (long n : {2L, 3L, 4L, 6L}) {
    auto t = toric_code_theory(n);
    auto subs = lagrangian_subgroups(t);
    CHECK(static_cast<long>(subs.size()) == divisor_count(n));
    for (const auto& s : subs) {
      CHECK(verify_lagrangian(t, s.elements));
      CHECK(is_lagrangian(t, s.elements));
    }
  }
}

TEST_CASE("U(1)_2 x U(1)_-4 has no gapped boundary") {
  auto t = condense(taxonomy_double(1, 2)).finite_theory;
  CHECK(t.order() == 8);
  CHECK(lagrangian_subgroups(t).empty());
  auto stacked = FiniteAnyonTheory::product(cyclic_theory(2, ph(1, 4)), cyclic_theory(4, ph(-1, 8)));
  CHECK(lagrangian_subgroups(stacked).empty());
  auto c = gauss_sum_central_charge(t);
  CHECK_FALSE(c.degenerate);
  CHECK(c.c_minus_mod8 == 0);
}

TEST_CASE("Z4 x Z4 with opposite spins contains the diagonal") {
  auto t = FiniteAnyonTheory::product(cyclic_theory(4, ph(1, 8)), cyclic_theory(4, ph(-1, 8)));
  std::vector<AnyonLabel> diag = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(is_lagrangian(t, diag));
  CHECK(verify_lagrangian(t, diag));
  bool found = false;
  for (const auto& s : lagrangian_subgroups(t)) {
    std::set<AnyonLabel> S(s.elements.begin(), s.elements.end());
    found = found || S == std::set<AnyonLabel>(diag.begin(), diag.end());
  }
  CHECK(found);
  CHECK_FALSE(is_lagrangian(t, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  CHECK_FALSE(is_lagrangian(t, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
}

TEST_CASE("Gauss sum central charges") {
  auto u2 = cyclic_theory(2, ph(1, 4));
  auto c = gauss_sum_central_charge(u2);
  CHECK(c.c_minus_mod8 == 1);
  CHECK(c.modulus == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gauss_sum_central_charge(toric_code_theory(2)).c_minus_mod8 == 0);
  CHECK(gauss_sum_central_charge(cyclic_theory(2, ph(-1, 4))).c_minus_mod8 == 7);
  // {1, psi} has a vanishing Gauss sum; a trivial Z2 has modulus sqrt 2.
  CHECK(gauss_sum_central_charge(cyclic_theory(2, ph(1, 2))).degenerate);
  CHECK_THROWS_AS(gauss_sum_central_charge(cyclic_theory(2, ph(0, 1))), NondegenerateCheckFailed);
}

TEST_CASE("central charge is additive under stacking") {
  std::mt19937_64 rng(7);
  std::vector<FiniteAnyonTheory> pool;
  for (long N = 2; N <= 8; ++N)
    for (long p = -2 * N + 1; p < 2 * N; ++p)
      if (std::gcd(p, N) == 1 && (N * p) % 2 == 0) pool.push_back(cyclic_theory(N, ph(p, 2 * N)));
  REQUIRE(pool.size() > 10);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < 200; ++s) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    auto ab = FiniteAnyonTheory::product(a, b);
    auto ca = gauss_sum_central_charge(a), cb = gauss_sum_central_charge(b);
    auto cab = gauss_sum_central_charge(ab);
    REQUIRE_FALSE(cab.degenerate);
    CHECK(cab.c_minus_mod8 == (ca.c_minus_mod8 + cb.c_minus_mod8) % 8);
    CHECK(cab.c_minus_mod8 == c_mod8_oracle(ab));
    CHECK(std::abs(cab.modulus - 1.0) < 1e-9);
  }
}

TEST_CASE("condensed theories are modular") {
  for (auto gens : {taxonomy_flux_charge(2), taxonomy_flux_charge(3), taxonomy_double(1, 2),
                    taxonomy_double(2, 3), taxonomy_even_k(1, 1, 2), taxonomy_even_k(1, 2, 2)}) {
    auto t = condense(gens).finite_theory;
    auto c = gauss_sum_central_charge(t);
    CHECK_FALSE(c.degenerate);
    CHECK(std::abs(c.modulus - 1.0) < 1e-9);
    CHECK(c.c_minus_mod8 == c_mod8_oracle(t));
  }
}
