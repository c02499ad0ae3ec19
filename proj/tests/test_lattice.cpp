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

#include <set>

#include "cvcond/errors.hpp"
#include "cvcond/lattice.hpp"

using namespace cvcond;

namespace {

FluxCharge fc(const char* f, const char* c) {
  return {QuadScalar::parse(f), QuadScalar::parse(c)};
}

Cochain translate(const LatticeGeometry& g, const Cochain& c, int dx, int dy) {
  Cochain out;
  for (auto [e, k] : c) {
    auto ec = g.edge_coord(e);
    out[g.edge(ec.o, ec.i + dx, ec.j + dy)] = k;
  }
  return out;
}

DisplacementVector path_string(const LatticeGeometry& g, const HoppingPattern& p,
                               const Cochain& path, const FluxCharge& x) {
  std::map<int, FluxCharge> coef;
  for (auto [e, k] : path) coef[e] = QuadScalar(k) * x;
  return operator_from_cochain(g, coef, p);
}

}  // namespace

TEST_CASE("geometry") {
  for (int L : {2, 3, 5}) {
    LatticeGeometry g(L);
    CHECK(g.num_edges() == 2 * L * L);
    CHECK(g.boundary_of_boundary_zero());
    for (int e = 0; e < g.num_edges(); ++e) {
      auto c = g.edge_coord(e);
      CHECK(g.edge(c.o, c.i, c.j) == e);
      CHECK(g.orientation_sign(e) == (c.o == Orient::V ? 1 : -1));
    }
  }
}

TEST_CASE("symplectic phase conventions") {
  LatticeGeometry g(2);
  DisplacementVector u(g), v(g), w(g);
  u.z[0] = frac(1, 2);
  v.x_hat[0] = 1;
  CHECK(symplectic_phase(u, v) == PhaseFraction(QuadScalar(frac(1, 2))));
  w.z[0] = 1;
  CHECK(symplectic_phase(w, v).is_trivial());
  DisplacementVector far(g);
  far.x_hat[5] = frac(1, 3);
  CHECK(symplectic_phase(u, far).is_trivial());
  CHECK(symplectic_value(u, v) == -symplectic_value(v, u));
}

TEST_CASE("parent model") {
  LatticeGeometry g(3);
  auto P = build_parent(g);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int p = 0; p < g.num_plaquettes(); ++p)
      CHECK(symplectic_phase(P.A.build(v, {QuadScalar(1)}), P.B.build(p, {QuadScalar(1)}))
                .is_trivial());
  // An open Z string carries charge at its two endpoints only.
  auto zs = z_string(g, direct_path(g, 0, 0, "EN"), QuadScalar(frac(1, 3)));
  int charged = 0;
  for (int v = 0; v < g.num_vertices(); ++v) charged += !charge_at(g, zs, v).is_zero();
  CHECK(charged == 2);
  for (int p = 0; p < g.num_plaquettes(); ++p) CHECK(flux_at(g, zs, p).is_zero());
  auto xs = x_string(g, dual_path(g, 0, 0, "NN"), QuadScalar(frac(2, 5)));
  int fluxed = 0;
  for (int p = 0; p < g.num_plaquettes(); ++p) fluxed += !flux_at(g, xs, p).is_zero();
  CHECK(fluxed == 2);
}

TEST_CASE("hopping synthesis examples") {
  LatticeGeometry g(3);
  auto flux = synthesize_hopping(validate_subgroup(taxonomy_flux()), g);
  CHECK(flux.h.dressing.empty());
  CHECK(flux.v.dressing.empty());
  CHECK(flux.h.x_coef == 1);

  auto B = validate_subgroup(taxonomy_composite(1));
  auto p = synthesize_hopping(B, g);
  CHECK(p.basis == HoppingBasis::Composite);
  for (Orient o : {Orient::H, Orient::V}) {
    CHECK(p.body_count(o) == 7);
    for (const auto& d : p.of(o).dressing) CHECK(abs(d.coef) == frac(1, 2));
  }
  CHECK(check_pattern(p, B).ok());
  auto psi = psi_table(p);
  CHECK_FALSE(psi.empty());
  for (const auto& e : psi) CHECK((e.eps == 1 || e.eps == -1));
  CHECK(p.dump() == synthesize_hopping(B, LatticeGeometry(4)).dump());
}

TEST_CASE("t-junction spin") {
  auto B = validate_subgroup(taxonomy_composite(1));
  auto p = synthesize_hopping(B, LatticeGeometry(3));
  CHECK(t_junction_spin(p, fc("1", "1")).is_trivial());
  CHECK(t_junction_spin(p, fc("1/2", "1/2")) == PhaseFraction(QuadScalar(frac(1, 4))));
  CHECK(t_junction_spin(p, fc("3/7", "0")).is_trivial());
  for (auto gens : {taxonomy_double(1, 2), taxonomy_double(2, 3), taxonomy_even_k(1, 1, 2)}) {
    auto o = condense(gens);
    auto q = synthesize_hopping(o.B, LatticeGeometry(3));
    for (const auto& a : o.finite_generators) CHECK(t_junction_spin(q, a) == spin(a));
    for (const auto& a : o.A.discrete_generators) CHECK(t_junction_spin(q, a) == spin(a));
  }
}

TEST_CASE("operator_from_cochain and the S_v identity") {
  LatticeGeometry g(3);
  auto B = validate_subgroup(taxonomy_composite(1));
  auto p = synthesize_hopping(B, g);
  CHECK(operator_from_cochain(g, {}, p).is_identity());

  FluxCharge x = fc("2/3", "1/5");
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::map<int, FluxCharge> coef;
    for (auto [e, s] : g.vertex_star(v)) coef[e] = QuadScalar(s) * x;
    CHECK(operator_from_cochain(g, coef, p) == vertex_coboundary(g, p, v, x));
  }

  // C_e(0, c) and the S_v(0, -c/2) at both ends of v(i+1, j-1) leave a single Z.
  QuadScalar c(frac(3, 4));
  for (auto [i, j] : {std::pair{0, 0}, {1, 2}}) {
    int e = g.edge(Orient::H, i, j);
    int ep = g.edge(Orient::V, i + 1, j - 1);
    auto op = hop(g, p, e, {QuadScalar(0), c});
    op += vertex_coboundary(g, p, g.vertex(i + 1, j), {QuadScalar(0), -c / QuadScalar(2)});
    op += vertex_coboundary(g, p, g.vertex(i + 1, j - 1), {QuadScalar(0), -c / QuadScalar(2)});
    CHECK(op.support() == std::vector<int>{ep});
    CHECK(op.x_hat[ep].is_zero());
    CHECK(op.z[ep].abs() == c);
  }
}

TEST_CASE("stabilizer codes commute for every taxonomy instance") {
  for (int L : {2, 3}) {
    for (auto gens : {taxonomy_flux(), taxonomy_flux_charge(2), taxonomy_flux_charge(3),
                      taxonomy_composite(1), taxonomy_composite(2), taxonomy_double(1, 2),
                      taxonomy_even_k(1, 1, 2)}) {
      auto S = build_code(validate_subgroup(gens), L);
      auto r = verify_commuting(S.generators);
      CHECK(r.pass);
      CHECK(r.violations.empty());
    }
  }
}

TEST_CASE("centralizer domains") {
  LatticeGeometry g(2);
  auto flux = build_code(validate_subgroup(taxonomy_flux()), 2);
  REQUIRE(flux.families.size() == 2);
  CHECK(flux.families[0].domain.continuous.size() == 1);
  CHECK(flux.families[1].domain.lattice == Mat<QuadScalar>{{QuadScalar(1)}});

  auto gkp = build_code(validate_subgroup(taxonomy_flux_charge(3)), 2);
  CHECK(gkp.families[0].domain.lattice == Mat<QuadScalar>{{QuadScalar(frac(1, 3))}});

  for (long n : {1L, 2L, 3L}) {
    auto S = build_code(validate_subgroup(taxonomy_composite(n)), 2);
    REQUIRE(S.families.size() == 1);
    const auto& d = S.families[0].domain;
    REQUIRE(d.continuous.size() == 1);
    CHECK((d.continuous[0][1] + QuadScalar(n) * d.continuous[0][0]).is_zero());
    for (const auto& v : d.lattice) CHECK((v[1] + QuadScalar(n) * v[0]).is_integer());
  }
}

TEST_CASE("corrupted fixture is caught with the right pair") {
  auto B = validate_subgroup(taxonomy_double(1, 2));
  auto S = build_code(B, 3);
  const auto& g = S.geometry;
  HoppingPattern bad = S.pattern;
  REQUIRE_FALSE(bad.h.dressing.empty());
  bad.h.dressing[0].coef = -bad.h.dressing[0].coef;
  CHECK_FALSE(check_pattern(bad, B).ok());

  // Rebuild a single hopping generator from the flipped pattern.
  auto G = S.generators;
  size_t victim = G.size();
  for (size_t i = 0; i < G.size() && victim == G.size(); ++i)
    if (G[i].family == "C_e" && g.edge_coord(G[i].site).o == Orient::H) victim = i;
  REQUIRE(victim < G.size());
  G[victim].op = hop(g, bad, G[victim].site, B.generators[G[victim].sample]);

  auto r = verify_commuting(G);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violation_labels.size() == r.violations.size());

  // Oracle: all-pairs brute force.
  std::set<std::pair<size_t, size_t>> expected;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      QuadScalar f = symplectic_value(G[i].op, G[j].op);
      bool ok = (G[i].continuous || G[j].continuous) ? f.is_zero() : f.is_integer();
      if (!ok) expected.insert({i, j});
    }
  std::set<std::pair<size_t, size_t>> got(r.violations.begin(), r.violations.end());
  CHECK(got == expected);
  for (auto [i, j] : r.violations) CHECK((i == victim || j == victim));
  CHECK(r.violation_labels[0].find(G[victim].label()) != std::string::npos);
}

TEST_CASE("syndromes at L = 8") {
  auto B = validate_subgroup(taxonomy_double(1, 2));
  auto S = build_code(B, 8);
  const auto& g = S.geometry;
  auto o = condense(taxonomy_double(1, 2));
  auto path = dual_path(g, 1, 1, "EEEENN");

  auto good = path_string(g, S.pattern, path, o.finite_generators[1]);
  auto s1 = syndrome(good, S);
  CHECK(s1.kind == SyndromeClass::DeconfinedString);
  CHECK(s1.count() > 0);

  auto half = QuadScalar(frac(1, 2)) * good;
  CHECK(syndrome(half, S).kind == SyndromeClass::Confined);

  auto confined = path_string(g, S.pattern, path, fc("1/4", "0"));
  CHECK(syndrome(confined, S).kind == SyndromeClass::Confined);

  auto stab = S.generators[0].op + S.generators[7].op;
  auto s0 = syndrome(stab, S);
  CHECK(s0.kind == SyndromeClass::Trivial);
  CHECK(s0.count() == 0);
}

TEST_CASE("fusion relations as stabilizer membership") {
  auto o = condense(taxonomy_double(1, 2));
  auto S = build_code(o.B, 3);
  const auto& g = S.geometry;
  int e = g.edge(Orient::H, 1, 1);
  const auto& a2 = o.finite_generators[0];
  const auto& a4 = o.finite_generators[1];
  auto w2 = hop(g, S.pattern, e, a2);
  auto w4 = hop(g, S.pattern, e, a4);
  CHECK(hop(g, S.pattern, e, QuadScalar(2) * a2) == QuadScalar(2) * w2);
  CHECK(stabilizer_membership(QuadScalar(2) * w2, S));
  CHECK(stabilizer_membership(QuadScalar(4) * w4, S));
  CHECK_FALSE(stabilizer_membership(QuadScalar(2) * w4, S));

  auto lc = logical_operators(S, standard_homology(g));
  REQUIRE(lc.factors.size() == 2);
  CHECK_FALSE(stabilizer_membership(lc.factors[0].x_op, S));
  CHECK(stabilizer_membership(QuadScalar(2) * lc.factors[0].x_op, S));
}

TEST_CASE("logical content") {
  auto flux = build_code(validate_subgroup(taxonomy_flux()), 3);
  auto lf = logical_operators(flux, standard_homology(flux.geometry));
  REQUIRE(lf.factors.size() == 2);
  for (const auto& f : lf.factors) {
    CHECK(f.kind == FactorKind::Rotor);
    CHECK(f.pairing.abs() == 1);
  }

  for (long n : {2L, 3L}) {
    auto S = build_code(validate_subgroup(taxonomy_flux_charge(n)), 3);
    auto lc = logical_operators(S, standard_homology(S.geometry));
    REQUIRE(lc.factors.size() == 2);
    for (const auto& f : lc.factors) {
      CHECK(f.kind == FactorKind::Qudit);
      CHECK(f.dimension == n);
    }
    CHECK(lc.finite_dimension == n * n);
  }

  auto S = build_code(validate_subgroup(taxonomy_double(1, 2)), 3);
  auto lc = logical_operators(S, standard_homology(S.geometry));
  REQUIRE(lc.factors.size() == 2);
  CHECK(lc.factors[0].dimension == 2);
  CHECK(lc.factors[1].dimension == 4);
  CHECK(lc.finite_dimension == 8);
  const auto& C = lc.commutation;
  REQUIRE(C.size() == 4);
  CHECK(C[0][1] == PhaseFraction(QuadScalar(frac(1, 2))));
  CHECK((C[2][3] == PhaseFraction(QuadScalar(frac(1, 4))) ||
         C[2][3] == PhaseFraction(QuadScalar(frac(-1, 4)))));
  for (int i : {0, 1})
    for (int j : {2, 3}) CHECK(C[i][j].is_trivial());
}

TEST_CASE("double(1,2) commutation matrix over coset labels") {
  auto o = condense(taxonomy_double(1, 2));
  auto S = build_code(o.B, 3);
  const auto& g = S.geometry;
  auto h = standard_homology(g);
  std::optional<int> sign;
  for (long k1 = 0; k1 < 2; ++k1)
    for (long k2 = 0; k2 < 4; ++k2)
      for (long l1 = 0; l1 < 2; ++l1)
        for (long l2 = 0; l2 < 4; ++l2) {
          auto a = coset_representative({QuadScalar(k1), QuadScalar(k2)}, o);
          auto b = coset_representative({QuadScalar(l1), QuadScalar(l2)}, o);
          auto f = symplectic_phase(cochain_string(g, S.pattern, h.gamma1, a),
                                    cochain_string(g, S.pattern, h.gamma2, b));
          QuadScalar want(frac(k1 * l1, 2) - frac(k2 * l2, 4));
          if (!sign) {
            if (f == PhaseFraction(want) && !(f == PhaseFraction(-want))) sign = 1;
            if (f == PhaseFraction(-want) && !(f == PhaseFraction(want))) sign = -1;
          }
          CHECK((f == PhaseFraction(want) || f == PhaseFraction(-want)));
          if (sign) CHECK(f == PhaseFraction(QuadScalar(*sign) * want));
        }
  CHECK(sign.has_value());
}

TEST_CASE("homology invariance of logical representatives") {
  for (auto gens : {taxonomy_double(1, 2), taxonomy_flux_charge(3), taxonomy_composite(1),
                    taxonomy_even_k(1, 1, 2)}) {
    auto o = condense(gens);
    auto S = build_code(o.B, 3);
    const auto& g = S.geometry;
    auto h = standard_homology(g);
    for (const auto& a : o.A.discrete_generators) {
      // Single-site charges travel along direct cycles as plain Z strings.
      bool charge = S.pattern.basis == HoppingBasis::SingleSite && a.flux_hat.is_zero();
      auto rep = [&](const Cochain& c) {
        return charge ? z_string(g, c, a.charge) : cochain_string(g, S.pattern, c, a);
      };
      auto cycles = charge ? std::vector<const Cochain*>{&h.eta1, &h.eta2}
                           : std::vector<const Cochain*>{&h.gamma1, &h.gamma2};
      for (const Cochain* c : cycles)
        for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {2, 1}}) {
          INFO(o.classification_tag, " ", a.str(), " shifted by ", dx, ",", dy);
          CHECK(stabilizer_membership(rep(*c) - rep(translate(g, *c, dx, dy)), S));
        }
    }
  }
}

TEST_CASE("hopping completeness for double(1,2)") {
  auto B = validate_subgroup(taxonomy_double(1, 2));
  for (int L : {2, 3}) {
    LatticeGeometry g(L);
    auto p = synthesize_hopping(B, g);
    Mat<QuadScalar> rows;
    for (int e = 0; e < g.num_edges(); ++e)
      for (const auto& b : B.generators) rows.push_back(hop(g, p, e, b).flatten());
    CHECK(rank(rows, 4 * L * L) == static_cast<size_t>(4 * L * L));
    // Independence of the two generators on every edge pair.
    for (int e = 0; e < g.num_edges(); ++e)
      for (int f = 0; f < g.num_edges(); ++f)
        CHECK(symplectic_phase(hop(g, p, e, B.generators[0]), hop(g, p, f, B.generators[1]))
                  .is_trivial());
  }
}
