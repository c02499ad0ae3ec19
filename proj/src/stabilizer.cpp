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


#include <algorithm>
#include <numeric>
#include <set>

#include "cvcond/errors.hpp"
#include "cvcond/lattice.hpp"

namespace cvcond {

namespace {

Vec<QuadScalar> unit(size_t r, size_t i) {
  Vec<QuadScalar> e(r);
  e[i] = 1;
  return e;
}

int anchor_count(const LatticeGeometry& g, AnchorKind k) {
  switch (k) {
    case AnchorKind::Vertex: return g.num_vertices();
    case AnchorKind::Edge: return g.num_edges();
    case AnchorKind::Plaquette: return g.num_plaquettes();
  }
  return 0;
}

char anchor_letter(AnchorKind k) {
  switch (k) {
    case AnchorKind::Vertex: return 'v';
    case AnchorKind::Edge: return 'e';
    case AnchorKind::Plaquette: return 'p';
  }
  return '?';
}

// Position on the doubled lattice, where vertices sit at even coordinates.
std::pair<int, int> doubled_position(const LatticeGeometry& g, AnchorKind k, int site) {
  switch (k) {
    case AnchorKind::Vertex: {
      auto [i, j] = g.vertex_coord(site);
      return {2 * i, 2 * j};
    }
    case AnchorKind::Plaquette: {
      auto [i, j] = g.plaquette_coord(site);
      return {2 * i + 1, 2 * j + 1};
    }
    case AnchorKind::Edge: {
      auto c = g.edge_coord(site);
      return c.o == Orient::H ? std::pair{2 * c.i + 1, 2 * c.j} : std::pair{2 * c.i, 2 * c.j + 1};
    }
  }
  return {0, 0};
}

int torus_distance(int a, int b, int period) {
  int d = std::abs(a - b) % period;
  return std::min(d, period - d);
}

bool commutes(const QuadScalar& f, bool continuous) {
  return continuous ? f.is_zero() : f.is_integer();
}

}  // namespace

std::string StabilizerGenerator::label() const {
  std::string s = family + "@" + anchor_letter(anchor) + std::to_string(site);
  s += continuous ? "~" : "#";
  return s + std::to_string(sample);
}

ParentModel build_parent(const LatticeGeometry& g) {
  ParentModel m;
  QuantizedDomain real_line;
  real_line.continuous.push_back(unit(1, 0));
  m.A = {"A_v", AnchorKind::Vertex, 1,
         [g](int v, const Vec<QuadScalar>& p) { return vertex_term(g, v, p[0]); }, real_line};
  m.B = {"B_p", AnchorKind::Plaquette, 1,
         [g](int pl, const Vec<QuadScalar>& p) { return plaquette_term(g, pl, p[0]); },
         real_line};
  return m;
}

std::vector<StabilizerFamily> centralizer(const LatticeGeometry& g,
                                          std::vector<StabilizerFamily> families,
                                          const std::vector<StabilizerGenerator>& hops) {
  (void)g;
  for (auto& f : families) {
    // Every anchor sees the same constraints, so anchor 0 suffices.
    std::vector<DisplacementVector> basis;
    for (size_t i = 0; i < f.r; ++i) basis.push_back(f.build(0, unit(f.r, i)));
    Mat<QuadScalar> integral, vanishing;
    for (const auto& h : hops) {
      Vec<QuadScalar> row(f.r);
      bool nonzero = false;
      for (size_t i = 0; i < f.r; ++i) {
        row[i] = symplectic_value(basis[i], h.op);
        nonzero = nonzero || !row[i].is_zero();
      }
      if (!nonzero) continue;
      (h.continuous ? vanishing : integral).push_back(std::move(row));
    }
    f.domain = quantize(integral, vanishing, f.r);
  }
  return families;
}

std::vector<StabilizerGenerator> sample_family(const LatticeGeometry& g,
                                               const StabilizerFamily& f) {
  std::vector<StabilizerGenerator> out;
  for (int s = 0; s < anchor_count(g, f.anchor); ++s) {
    int k = 0;
    for (const auto& p : f.domain.lattice) {
      DisplacementVector op = f.build(s, p);
      if (!op.is_identity()) out.push_back({f.name, f.anchor, s, k, false, std::move(op)});
      ++k;
    }
    k = 0;
    for (const auto& p : f.domain.continuous) {
      DisplacementVector op = f.build(s, p);
      if (!op.is_identity()) out.push_back({f.name, f.anchor, s, k, true, std::move(op)});
      ++k;
    }
  }
  return out;
}

StabilizerModel build_code(const BosonSubgroup& B, int L) {
  LatticeGeometry g(L);
  return build_code(B, L, synthesize_hopping(B, g));
}

StabilizerModel build_code(const BosonSubgroup& B, int L, const HoppingPattern& pattern) {
  if (L < 2) throw GeometryMismatch("need L >= 2, got " + std::to_string(L));
  StabilizerModel S;
  S.geometry = LatticeGeometry(L);
  S.B = B;
  S.pattern = pattern;
  const LatticeGeometry& g = S.geometry;

  for (int e = 0; e < g.num_edges(); ++e)
    for (size_t k = 0; k < B.rank(); ++k)
      S.hops.push_back({"C_e", AnchorKind::Edge, e, static_cast<int>(k), B.continuous[k],
                        hop(g, pattern, e, B.generators[k])});

  std::vector<StabilizerFamily> fams;
  if (pattern.basis == HoppingBasis::SingleSite) {
    ParentModel parent = build_parent(g);
    fams = {parent.A, parent.B};
  } else {
    StabilizerFamily sv;
    sv.name = "S_v";
    sv.anchor = AnchorKind::Vertex;
    sv.r = 2;
    sv.build = [g, pattern](int v, const Vec<QuadScalar>& p) {
      return vertex_coboundary(g, pattern, v, FluxCharge(p[0], p[1]));
    };
    fams = {sv};
  }
  S.families = centralizer(g, std::move(fams), S.hops);

  S.generators = S.hops;
  for (const auto& f : S.families) {
    auto gens = sample_family(g, f);
    S.generators.insert(S.generators.end(), gens.begin(), gens.end());
  }
  return S;
}

CommutationReport verify_commuting(const std::vector<StabilizerGenerator>& gens) {
  CommutationReport r;
  std::vector<std::set<int>> supports;
  for (const auto& s : gens) {
    auto v = s.op.support();
    supports.emplace_back(v.begin(), v.end());
  }
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b) {
      ++r.pairs_checked;
      bool overlap = std::any_of(supports[a].begin(), supports[a].end(),
                                 [&](int e) { return supports[b].count(e) > 0; });
      if (!overlap) continue;
      QuadScalar f = symplectic_value(gens[a].op, gens[b].op);
      if (!commutes(f, gens[a].continuous || gens[b].continuous)) {
        r.pass = false;
        r.violations.emplace_back(a, b);
        r.violation_labels.push_back(gens[a].label() + " x " + gens[b].label() + " : " +
                                     phase_reduce(f).str());
      }
    }
  return r;
}

bool stabilizer_membership(const DisplacementVector& op, const StabilizerModel& S) {
  if (op.L != S.geometry.L()) throw GeometryMismatch("operator and code differ in L");
  Mat<QuadScalar> real_cols, int_cols;
  for (const auto& s : S.generators)
    (s.continuous ? real_cols : int_cols).push_back(s.op.flatten());
  return solve_mixed(real_cols, int_cols, op.flatten()).has_value();
}

std::string to_string(SyndromeClass c) {
  switch (c) {
    case SyndromeClass::Trivial: return "trivial";
    case SyndromeClass::DeconfinedString: return "deconfined-string";
    case SyndromeClass::Confined: return "confined";
  }
  return "?";
}

size_t Syndrome::count() const {
  size_t n = 0;
  for (const auto& [name, sites] : violated) n += sites.size();
  return n;
}

Syndrome syndrome(const DisplacementVector& op, const StabilizerModel& S) {
  const LatticeGeometry& g = S.geometry;
  if (op.L != g.L()) throw GeometryMismatch("operator and code differ in L");
  Syndrome out;
  std::set<std::tuple<std::string, AnchorKind, int>> hits;
  for (const auto& s : S.generators)
    if (!commutes(symplectic_value(op, s.op), s.continuous))
      hits.insert({s.family, s.anchor, s.site});
  if (hits.empty()) return out;

  std::vector<std::pair<int, int>> pts;
  for (const auto& [name, kind, site] : hits) {
    out.violated[name].push_back(site);
    pts.push_back(doubled_position(g, kind, site));
  }

  // Cluster violations lying within two lattice spacings of each other.
  const int period = 2 * g.L();
  auto dist = [&](size_t a, size_t b) {
    return std::max(torus_distance(pts[a].first, pts[b].first, period),
                    torus_distance(pts[a].second, pts[b].second, period));
  };
  std::vector<size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      if (dist(a, b) <= 4) parent[find(a)] = find(b);

  std::map<size_t, std::vector<size_t>> clusters;
  for (size_t a = 0; a < pts.size(); ++a) clusters[find(a)].push_back(a);
  bool compact = clusters.size() <= 2;
  for (const auto& [root, members] : clusters)
    for (size_t a : members)
      for (size_t b : members)
        if (dist(a, b) > 6) compact = false;
  out.kind = compact ? SyndromeClass::DeconfinedString : SyndromeClass::Confined;
  return out;
}

}  // namespace cvcond
