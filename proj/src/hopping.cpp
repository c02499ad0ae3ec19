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
#include <mutex>
#include <sstream>

#include "cvcond/errors.hpp"
#include "cvcond/lattice.hpp"

namespace cvcond {

namespace {

const char* orient_name(Orient o) { return o == Orient::H ? "h" : "v"; }

// Geometry used for local checks; large enough that radius-2 offsets never wrap.
constexpr int kLocalL = 6;
constexpr int kCenter = 2;

}  // namespace

DisplacementVector hop(const LatticeGeometry& g, const HoppingPattern& p, int e,
                       const FluxCharge& x) {
  DisplacementVector d(g);
  auto c = g.edge_coord(e);
  const OrientPattern& op = p.of(c.o);
  if (!x.flux_hat.is_zero()) d.x_hat[e] += QuadScalar(op.x_coef) * x.flux_hat;
  if (!x.charge.is_zero())
    for (const auto& t : op.dressing)
      d.z[g.edge(t.o, c.i + t.dx, c.j + t.dy)] += QuadScalar(t.coef) * x.charge;
  return d;
}

DisplacementVector operator_from_cochain(const LatticeGeometry& g,
                                         const std::map<int, FluxCharge>& coefficients,
                                         const HoppingPattern& p) {
  DisplacementVector d(g);
  for (const auto& [e, x] : coefficients) d += hop(g, p, e, x);
  return d;
}

DisplacementVector vertex_coboundary(const LatticeGeometry& g, const HoppingPattern& p, int v,
                                     const FluxCharge& x) {
  std::map<int, FluxCharge> coeffs;
  for (auto [e, s] : g.vertex_star(v)) coeffs[e] = coeffs[e] + QuadScalar(s) * x;
  return operator_from_cochain(g, coeffs, p);
}

DisplacementVector cochain_string(const LatticeGeometry& g, const HoppingPattern& p,
                                  const Cochain& gamma, const FluxCharge& x) {
  DisplacementVector d(g);
  for (auto [e, s] : gamma) d += hop(g, p, e, QuadScalar(s) * x);
  return d;
}

std::string HoppingPattern::dump() const {
  std::ostringstream os;
  os << "basis " << to_string(basis) << "\n";
  for (Orient o : {Orient::H, Orient::V}) {
    const OrientPattern& op = of(o);
    std::vector<std::tuple<int, int, int, std::string, std::string>> rows;
    rows.emplace_back(static_cast<int>(o), 0, 0, QuadScalar(op.x_coef).str(), "0");
    for (const auto& t : op.dressing) {
      if (t.o == o && t.dx == 0 && t.dy == 0) {
        std::get<4>(rows[0]) = QuadScalar(t.coef).str();
        continue;
      }
      rows.emplace_back(static_cast<int>(t.o), t.dx, t.dy, "0", QuadScalar(t.coef).str());
    }
    std::sort(rows.begin() + 1, rows.end());
    os << orient_name(o) << ":";
    for (const auto& [ro, dx, dy, xc, zc] : rows)
      os << " (" << orient_name(static_cast<Orient>(ro)) << "(" << dx << "," << dy << "), " << xc
         << ", " << zc << ")";
    os << "\n";
  }
  return os.str();
}

size_t HoppingPattern::body_count(Orient o) const {
  const OrientPattern& op = of(o);
  size_t n = 1;
  for (const auto& t : op.dressing)
    if (!(t.o == o && t.dx == 0 && t.dy == 0)) ++n;
  return n;
}

namespace {

Rational dressing_at(const OrientPattern& p, Orient o, int dx, int dy) {
  for (const auto& t : p.dressing)
    if (t.o == o && t.dx == dx && t.dy == dy) return t.coef;
  return 0;
}

}  // namespace

std::vector<PsiEntry> psi_table(const HoppingPattern& p) {
  std::vector<PsiEntry> out;
  for (Orient a : {Orient::H, Orient::V})
    for (Orient b : {Orient::H, Orient::V})
      for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx) {
          if (a == b && dx == 0 && dy == 0) continue;
          Rational alpha = p.of(b).x_coef * dressing_at(p.of(a), b, dx, dy);
          if (alpha == 0) continue;
          Rational eps = 2 * alpha;
          out.push_back({a, b, dx, dy, static_cast<int>(eps.get_num().get_si())});
        }
  return out;
}

namespace {

QuadScalar t_junction_value(const HoppingPattern& p, const FluxCharge& x) {
  LatticeGeometry g(kLocalL);
  const int i = kCenter, j = kCenter;
  int P0 = g.plaquette(i, j);
  // Legs counterclockwise: south, east, north.
  std::vector<int> legs = {g.edge(Orient::H, i, j), g.edge(Orient::V, i + 1, j),
                           g.edge(Orient::H, i, j + 1)};
  std::vector<DisplacementVector> w;
  for (int e : legs) {
    int sign = 0;
    for (auto [pp, s] : g.edge_cofaces(e))
      if (pp == P0) sign = s;
    Rational xc = p.of(g.edge_coord(e).o).x_coef;
    w.push_back(hop(g, p, e, QuadScalar(Rational(sign) * xc) * x));
  }
  return symplectic_value(w[0], w[1]) + symplectic_value(w[1], w[2]) +
         symplectic_value(w[2], w[0]);
}

// Composite string along a dual walk; moves the composite x to the last plaquette.
DisplacementVector dual_walk_string(const LatticeGeometry& g, const HoppingPattern& p, int i,
                                    int j, const std::string& moves, const FluxCharge& x) {
  DisplacementVector d(g);
  for (auto [e, s] : dual_path(g, i, j, moves)) {
    Rational xc = p.of(g.edge_coord(e).o).x_coef;
    d += hop(g, p, e, QuadScalar(Rational(s) * xc) * x);
  }
  return d;
}

}  // namespace

PhaseFraction t_junction_spin(const HoppingPattern& p, const FluxCharge& x) {
  return phase_reduce(t_junction_value(p, x));
}

PatternCheck check_pattern(const HoppingPattern& p, const BosonSubgroup& B) {
  PatternCheck r;
  LatticeGeometry g(kLocalL);
  const bool composite = p.basis == HoppingBasis::Composite;
  const std::vector<FluxCharge> probes = {
      {QuadScalar(1), QuadScalar(1)},
      {QuadScalar(frac(1, 3)), QuadScalar(frac(2, 5))},
      {QuadScalar(frac(-3, 7)), QuadScalar(frac(1, 2))}};

  // (i) one-edge syndrome on the parent terms.
  r.syndrome_ok = true;
  for (Orient o : {Orient::H, Orient::V}) {
    int e = g.edge(o, kCenter, kCenter);
    for (const auto& x : composite ? probes : B.generators) {
      DisplacementVector op = hop(g, p, e, x);
      std::vector<QuadScalar> want_flux(g.num_plaquettes()), want_charge(g.num_vertices());
      for (auto [pl, s] : g.edge_cofaces(e)) {
        QuadScalar f = QuadScalar(Rational(s) * p.of(o).x_coef) * x.flux_hat;
        want_flux[pl] += f;
        if (composite) {
          // charge rides south east of the flux, same sign as the flux
          int sgn_f = s * sgn(p.of(o).x_coef);
          want_charge[g.south_east(pl)] += QuadScalar(sgn_f) * x.charge;
        }
      }
      if (!composite) {
        want_charge[g.head(e)] += x.charge;
        want_charge[g.tail(e)] -= x.charge;
      }
      for (int pl = 0; pl < g.num_plaquettes(); ++pl)
        if (flux_at(g, op, pl) != want_flux[pl]) r.syndrome_ok = false;
      for (int v = 0; v < g.num_vertices(); ++v)
        if (charge_at(g, op, v) != want_charge[v]) r.syndrome_ok = false;
    }
  }
  if (!r.syndrome_ok) r.failures.push_back("single-hop syndrome");

  // (ii) commutation table.
  r.psi_ok = true;
  auto table = psi_table(p);
  FluxCharge fx{QuadScalar(1), QuadScalar(0)}, fc{QuadScalar(0), QuadScalar(1)};
  for (Orient a : {Orient::H, Orient::V}) {
    int e = g.edge(a, kCenter, kCenter);
    for (int e2 = 0; e2 < g.num_edges(); ++e2) {
      if (e2 == e) continue;
      auto c2 = g.edge_coord(e2);
      int dx = c2.i - kCenter, dy = c2.j - kCenter;
      int eps = 0;
      for (const auto& t : table)
        if (t.from == a && t.to == c2.o && t.dx == dx && t.dy == dy) eps = t.eps;
      QuadScalar half = QuadScalar(frac(eps, 2));
      if (symplectic_value(hop(g, p, e, fx), hop(g, p, e2, fc)) != half ||
          symplectic_value(hop(g, p, e, fc), hop(g, p, e2, fx)) != half ||
          !symplectic_value(hop(g, p, e, fx), hop(g, p, e2, fx)).is_zero() ||
          !symplectic_value(hop(g, p, e, fc), hop(g, p, e2, fc)).is_zero())
        r.psi_ok = false;
      if (!composite && eps != 0) r.psi_ok = false;
    }
  }
  if (!r.psi_ok) r.failures.push_back("psi table");

  // (iii) all generator hops commute.
  r.generators_commute = true;
  {
    LatticeGeometry g4(4);
    std::vector<std::pair<DisplacementVector, bool>> ops;
    for (int e = 0; e < g4.num_edges(); ++e)
      for (size_t k = 0; k < B.rank(); ++k)
        ops.emplace_back(hop(g4, p, e, B.generators[k]), B.continuous[k]);
    for (size_t a = 0; a < ops.size(); ++a)
      for (size_t b = a + 1; b < ops.size(); ++b) {
        QuadScalar f = symplectic_value(ops[a].first, ops[b].first);
        bool ok = (ops[a].second || ops[b].second) ? f.is_zero() : f.is_integer();
        if (!ok) r.generators_commute = false;
      }
  }
  if (!r.generators_commute) r.failures.push_back("generator hops commute");

  // (iv) strings only excite their endpoints.
  r.strings_ok = true;
  const std::vector<std::string> walks = {"EEE", "NNN", "ENEN", "WWSS", "NWWS"};
  for (const auto& walk : walks) {
    int i = kCenter, j = kCenter;
    for (char m : walk) {
      if (m == 'E') ++i;
      if (m == 'W') --i;
      if (m == 'N') ++j;
      if (m == 'S') --j;
    }
    int P0 = g.plaquette(kCenter, kCenter), P1 = g.plaquette(i, j);
    std::vector<FluxCharge> xs;
    if (composite) {
      xs = probes;
    } else {
      for (const auto& b : B.generators)
        if (b.charge.is_zero()) xs.push_back(b);
    }
    for (const auto& x : xs) {
      DisplacementVector op = dual_walk_string(g, p, kCenter, kCenter, walk, x);
      for (int pl = 0; pl < g.num_plaquettes(); ++pl) {
        QuadScalar want = pl == P1 ? x.flux_hat : pl == P0 ? -x.flux_hat : QuadScalar(0);
        if (flux_at(g, op, pl) != want) r.strings_ok = false;
      }
      for (int v = 0; v < g.num_vertices(); ++v) {
        QuadScalar want;
        if (composite) {
          if (v == g.south_east(P1)) want += x.charge;
          if (v == g.south_east(P0)) want -= x.charge;
        }
        if (charge_at(g, op, v) != want) r.strings_ok = false;
      }
    }
    if (!composite) {
      for (const auto& b : B.generators) {
        if (!b.flux_hat.is_zero()) continue;
        DisplacementVector op(g);
        for (auto [e, s] : direct_path(g, kCenter, kCenter, walk))
          op += hop(g, p, e, QuadScalar(s) * b);
        for (int v = 0; v < g.num_vertices(); ++v) {
          QuadScalar want;
          if (v == g.vertex(i, j)) want += b.charge;
          if (v == g.vertex(kCenter, kCenter)) want -= b.charge;
          if (charge_at(g, op, v) != want) r.strings_ok = false;
        }
      }
    }
  }
  if (!r.strings_ok) r.failures.push_back("string endpoints");

  // Exchange statistics from the T-junction.
  r.t_junction_ok = true;
  std::vector<FluxCharge> tj = composite ? probes : std::vector<FluxCharge>{fx, fc};
  for (const auto& x : tj)
    if (t_junction_value(p, x) != spin_value(x)) r.t_junction_ok = false;
  if (!r.t_junction_ok) r.failures.push_back("t-junction spin");
  return r;
}

namespace {

struct Slot {
  Orient o;
  int dx, dy;
};

const std::vector<Slot>& slots(Orient o) {
  static const std::vector<Slot> h = {{Orient::H, 0, 1},  {Orient::H, 0, -1}, {Orient::V, 0, 0},
                                      {Orient::V, 1, 0},  {Orient::V, 0, -1}, {Orient::V, 1, -1}};
  static const std::vector<Slot> v = {{Orient::H, 0, 0},  {Orient::H, 0, 1}, {Orient::H, -1, 0},
                                      {Orient::H, -1, 1}, {Orient::V, 1, 0}, {Orient::V, -1, 0}};
  return o == Orient::H ? h : v;
}

// Candidate in doubled units so all arithmetic is integral.
struct Candidate {
  int sign;
  std::array<int, 6> d2;
};

constexpr std::array<int, 7> kValues = {0, 1, -1, 2, -2, 4, -4};

std::pair<int, int> tail_of(Orient, int i, int j) { return {i, j}; }
std::pair<int, int> head_of(Orient o, int i, int j) {
  return o == Orient::H ? std::make_pair(i + 1, j) : std::make_pair(i, j + 1);
}

// Plaquettes of an edge at the origin with their boundary sign.
std::array<std::tuple<int, int, int>, 2> cofaces0(Orient o) {
  if (o == Orient::H) return {{{0, 0, 1}, {0, -1, -1}}};
  return {{{0, 0, -1}, {-1, 0, 1}}};
}

bool satisfies_syndrome(Orient o, const Candidate& c) {
  std::map<std::pair<int, int>, int> div;
  const auto& sl = slots(o);
  for (size_t k = 0; k < sl.size(); ++k) {
    if (c.d2[k] == 0) continue;
    div[head_of(sl[k].o, sl[k].dx, sl[k].dy)] += c.d2[k];
    div[tail_of(sl[k].o, sl[k].dx, sl[k].dy)] -= c.d2[k];
  }
  std::map<std::pair<int, int>, int> want;
  for (auto [pi, pj, s] : cofaces0(o)) want[{pi + 1, pj}] += 2 * s * c.sign;
  for (auto it = div.begin(); it != div.end();)
    it = it->second == 0 ? div.erase(it) : std::next(it);
  for (auto it = want.begin(); it != want.end();)
    it = it->second == 0 ? want.erase(it) : std::next(it);
  return div == want;
}

std::vector<Candidate> syndrome_candidates(Orient o) {
  std::vector<Candidate> out;
  for (int sign : {1, -1}) {
    std::array<size_t, 6> idx{};
    while (true) {
      Candidate c{sign, {}};
      for (size_t k = 0; k < 6; ++k) c.d2[k] = kValues[idx[k]];
      if (satisfies_syndrome(o, c)) out.push_back(c);
      size_t k = 0;
      while (k < 6 && ++idx[k] == kValues.size()) idx[k++] = 0;
      if (k == 6) break;
    }
  }
  return out;
}

int d2_at(Orient o, const Candidate& c, Orient to, int dx, int dy) {
  const auto& sl = slots(o);
  for (size_t k = 0; k < sl.size(); ++k)
    if (sl[k].o == to && sl[k].dx == dx && sl[k].dy == dy) return c.d2[k];
  return 0;
}

bool pair_table_ok(const Candidate& h, const Candidate& v) {
  auto cand = [&](Orient o) -> const Candidate& { return o == Orient::H ? h : v; };
  for (Orient a : {Orient::H, Orient::V})
    for (Orient b : {Orient::H, Orient::V})
      for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx) {
          if (a == b && dx == 0 && dy == 0) continue;
          int alpha = cand(b).sign * d2_at(a, cand(a), b, dx, dy);
          int beta = cand(a).sign * d2_at(b, cand(b), a, -dx, -dy);
          bool ok = (alpha == 0 && beta == 0) || ((alpha == 1 || alpha == -1) && alpha == -beta);
          if (!ok) return false;
        }
  return true;
}

OrientPattern to_pattern(Orient o, const Candidate& c) {
  OrientPattern p;
  p.x_coef = c.sign;
  const auto& sl = slots(o);
  for (size_t k = 0; k < sl.size(); ++k)
    if (c.d2[k] != 0) p.dressing.push_back({sl[k].o, sl[k].dx, sl[k].dy, frac(c.d2[k], 2)});
  return p;
}

// Joint solutions of the B-independent constraints, in canonical order:
// positive X signs first, then lexicographic in the value order above.
const std::vector<HoppingPattern>& composite_solutions() {
  static std::vector<HoppingPattern> sols;
  static std::once_flag once;
  std::call_once(once, [] {
    auto hs = syndrome_candidates(Orient::H);
    auto vs = syndrome_candidates(Orient::V);
    for (const auto& h : hs)
      for (const auto& v : vs)
        if (pair_table_ok(h, v)) {
          HoppingPattern p;
          p.basis = HoppingBasis::Composite;
          p.h = to_pattern(Orient::H, h);
          p.v = to_pattern(Orient::V, v);
          sols.push_back(p);
        }
    std::stable_sort(sols.begin(), sols.end(), [](const HoppingPattern& a, const HoppingPattern& b) {
      int ka = (a.h.x_coef < 0) + (a.v.x_coef < 0);
      int kb = (b.h.x_coef < 0) + (b.v.x_coef < 0);
      return ka < kb;
    });
  });
  return sols;
}

}  // namespace

HoppingPattern synthesize_hopping(const BosonSubgroup& B, const LatticeGeometry& geometry) {
  (void)geometry;  // patterns are translation covariant; local checks use their own lattice
  if (B.basis == HoppingBasis::SingleSite) {
    HoppingPattern p;
    p.basis = HoppingBasis::SingleSite;
    bool any_charge = false;
    for (const auto& g : B.generators)
      if (!g.charge.is_zero()) any_charge = true;
    if (any_charge) {
      p.h.dressing.push_back({Orient::H, 0, 0, Rational(1)});
      p.v.dressing.push_back({Orient::V, 0, 0, Rational(1)});
    }
    if (!check_pattern(p, B).ok()) throw NoPatternFound("single-site pattern failed its checks");
    return p;
  }
  if (!B.cross_even) throw NoPatternFound("cross form is odd");
  for (const auto& p : composite_solutions())
    if (check_pattern(p, B).ok()) return p;
  throw NoPatternFound("no dressing within radius 1 satisfies every constraint");
}

}  // namespace cvcond
