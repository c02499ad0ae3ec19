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
#include <sstream>

#include "cvcond/errors.hpp"
#include "cvcond/lattice.hpp"

namespace cvcond {

std::array<std::array<int, 2>, 2> HomologyBasis::intersection() const {
  auto dot = [](const Cochain& a, const Cochain& b) {
    int s = 0;
    for (auto [e, x] : a) {
      auto it = b.find(e);
      if (it != b.end()) s += x * it->second;
    }
    return s;
  };
  return {{{dot(eta1, gamma1), dot(eta1, gamma2)}, {dot(eta2, gamma1), dot(eta2, gamma2)}}};
}

HomologyBasis standard_homology(const LatticeGeometry& g) {
  HomologyBasis h;
  for (int k = 0; k < g.L(); ++k) {
    h.eta1[g.edge(Orient::H, k, 0)] = 1;
    h.eta2[g.edge(Orient::V, 0, k)] = 1;
    h.gamma1[g.edge(Orient::H, 0, k)] = 1;
    h.gamma2[g.edge(Orient::V, k, 0)] = 1;
  }
  return h;
}

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Qudit: return "qudit";
    case FactorKind::Rotor: return "rotor";
    case FactorKind::CV: return "CV";
  }
  return "?";
}

std::string LogicalContent::summary() const {
  if (factors.empty()) return "nothing";
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " + ";
    os << to_string(factors[i].kind);
    if (factors[i].kind == FactorKind::Qudit) os << "(" << factors[i].dimension << ")";
  }
  return os.str();
}

namespace {

struct StringFamily {
  std::string name;
  size_t r;
  std::function<DisplacementVector(const Vec<QuadScalar>&)> build;
};

std::vector<StringFamily> string_families(const StabilizerModel& S, const HomologyBasis& h) {
  const LatticeGeometry& g = S.geometry;
  std::vector<StringFamily> out;
  if (S.pattern.basis == HoppingBasis::SingleSite) {
    out.push_back({"Z_eta1", 1, [g, c = h.eta1](const Vec<QuadScalar>& p) {
                     return z_string(g, c, p[0]);
                   }});
    out.push_back({"Z_eta2", 1, [g, c = h.eta2](const Vec<QuadScalar>& p) {
                     return z_string(g, c, p[0]);
                   }});
    out.push_back({"X_gamma1", 1, [g, c = h.gamma1](const Vec<QuadScalar>& p) {
                     return x_string(g, c, p[0]);
                   }});
    out.push_back({"X_gamma2", 1, [g, c = h.gamma2](const Vec<QuadScalar>& p) {
                     return x_string(g, c, p[0]);
                   }});
  } else {
    const HoppingPattern& pat = S.pattern;
    out.push_back({"W_gamma1", 2, [g, pat, c = h.gamma1](const Vec<QuadScalar>& p) {
                     return cochain_string(g, pat, c, FluxCharge(p[0], p[1]));
                   }});
    out.push_back({"W_gamma2", 2, [g, pat, c = h.gamma2](const Vec<QuadScalar>& p) {
                     return cochain_string(g, pat, c, FluxCharge(p[0], p[1]));
                   }});
  }
  return out;
}

using PVec = Vec<QuadScalar>;

PVec axpy(const QuadScalar& a, const PVec& x, PVec y) {
  for (size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

PVec scaled(const QuadScalar& a, PVec x) {
  for (auto& v : x) v *= a;
  return x;
}

// Parameter space of all string families with its commutation form.
class StringSpace {
 public:
  StringSpace(const StabilizerModel& S, const HomologyBasis& h)
      : fams_(string_families(S, h)), L_(S.geometry) {
    for (const auto& f : fams_)
      for (size_t i = 0; i < f.r; ++i) {
        PVec e(f.r);
        e[i] = 1;
        cols_.push_back(f.build(e));
      }
    const size_t R = cols_.size();
    omega_.assign(R, PVec(R));
    for (size_t i = 0; i < R; ++i)
      for (size_t j = 0; j < R; ++j) omega_[i][j] = symplectic_value(cols_[i], cols_[j]);
  }

  size_t dim() const { return cols_.size(); }
  const std::vector<DisplacementVector>& columns() const { return cols_; }

  QuadScalar omega(const PVec& p, const PVec& q) const {
    QuadScalar s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      for (size_t j = 0; j < q.size(); ++j)
        if (!q[j].is_zero() && !omega_[i][j].is_zero()) s += p[i] * q[j] * omega_[i][j];
    }
    return s;
  }

  DisplacementVector op(const PVec& p) const {
    DisplacementVector d(L_);
    for (size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) d += p[i] * cols_[i];
    return d;
  }

  std::string name(const PVec& p) const {
    std::string s;
    size_t k = 0;
    for (const auto& f : fams_) {
      bool any = false;
      for (size_t i = 0; i < f.r; ++i) any = any || !p[k + i].is_zero();
      if (any) {
        if (!s.empty()) s += " * ";
        s += f.name + "(";
        for (size_t i = 0; i < f.r; ++i) s += (i ? ", " : "") + p[k + i].str();
        s += ")";
      }
      k += f.r;
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<StringFamily> fams_;
  LatticeGeometry L_;
  std::vector<DisplacementVector> cols_;
  Mat<QuadScalar> omega_;
};

bool in_real_span(const DisplacementVector& op, const StabilizerModel& S) {
  Mat<QuadScalar> real_cols;
  for (const auto& s : S.generators)
    if (s.continuous) real_cols.push_back(s.op.flatten());
  return solve_mixed(real_cols, {}, op.flatten()).has_value();
}

Rational require_rational(const QuadScalar& x, const char* what) {
  if (!x.is_rational()) throw NotDiscrete(std::string(what) + " is irrational: " + x.str());
  return x.rational_part();
}

Integer lcm_den(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Symplectic basis of a finite abelian group Z_{n_1} x ... with an alternating
// nondegenerate pairing, found by exhaustive search.
struct FinitePair {
  std::vector<long> x, y;
  long order;
};

std::vector<FinitePair> finite_symplectic_basis(const std::vector<long>& n,
                                                const Mat<Rational>& gram) {
  const size_t a = n.size();
  long total = 1;
  for (long k : n) {
    total *= k;
    if (total > 1'000'000) throw Error("logical group too large for exhaustive decomposition");
  }
  std::vector<std::vector<long>> elems;
  elems.reserve(total);
  for (long idx = 0; idx < total; ++idx) {
    std::vector<long> v(a);
    long r = idx;
    for (size_t i = 0; i < a; ++i) {
      v[i] = r % n[i];
      r /= n[i];
    }
    elems.push_back(std::move(v));
  }
  auto pair = [&](const std::vector<long>& u, const std::vector<long>& v) {
    Rational s = 0;
    for (size_t i = 0; i < a; ++i) {
      if (!u[i]) continue;
      for (size_t j = 0; j < a; ++j)
        if (v[j] && gram[i][j] != 0) s += gram[i][j] * u[i] * v[j];
    }
    s -= Rational(Integer(s.get_num() / s.get_den()));
    if (s < 0) s += 1;
    return s;
  };
  auto order = [&](const std::vector<long>& u) {
    long o = 1;
    for (size_t i = 0; i < a; ++i) o = std::lcm(o, n[i] / std::gcd(u[i], n[i]));
    return o;
  };

  std::vector<FinitePair> out;
  std::vector<std::vector<long>> H = elems;
  while (H.size() > 1) {
    size_t best = 0;
    long N = 0;
    for (size_t k = 0; k < H.size(); ++k) {
      long o = order(H[k]);
      if (o > N) {
        N = o;
        best = k;
      }
    }
    const auto x = H[best];
    const Rational target = frac(1, N);
    const std::vector<long>* y = nullptr;
    for (const auto& h : H)
      if (pair(x, h) == target) {
        y = &h;
        break;
      }
    if (!y) throw NondegenerateCheckFailed("logical pairing is degenerate");
    FinitePair fp{x, *y, N};
    std::vector<std::vector<long>> rest;
    for (const auto& h : H)
      if (pair(h, fp.x) == 0 && pair(h, fp.y) == 0) rest.push_back(h);
    if (rest.size() * static_cast<size_t>(N) * static_cast<size_t>(N) != H.size())
      throw NondegenerateCheckFailed("logical pairing does not split");
    out.push_back(std::move(fp));
    H = std::move(rest);
  }
  return out;
}

}  // namespace

LogicalContent logical_operators(const StabilizerModel& S, const HomologyBasis& basis) {
  StringSpace space(S, basis);
  const size_t R = space.dim();

  // Strings commuting with every stabilizer.
  Mat<QuadScalar> integral, vanishing;
  for (const auto& s : S.generators) {
    PVec row(R);
    bool nonzero = false;
    for (size_t i = 0; i < R; ++i) {
      row[i] = symplectic_value(space.columns()[i], s.op);
      nonzero = nonzero || !row[i].is_zero();
    }
    if (nonzero) (s.continuous ? vanishing : integral).push_back(std::move(row));
  }
  QuantizedDomain dom = quantize(integral, vanishing, R);
  std::vector<PVec> lat = dom.lattice;
  std::vector<PVec> cont = dom.continuous;

  LogicalContent out;
  std::vector<LogicalFactor> qudits, rotors, cvs;

  // Continuous pairs that do not commute: CV factors.
  for (bool found = true; found;) {
    found = false;
    for (size_t i = 0; i < cont.size() && !found; ++i)
      for (size_t j = i + 1; j < cont.size() && !found; ++j) {
        QuadScalar w = space.omega(cont[i], cont[j]);
        if (w.is_zero()) continue;
        found = true;
        PVec v = cont[i], u = cont[j];
        PVec un = scaled(w.inverse(), u);
        auto project = [&](const PVec& z) {
          return axpy(space.omega(z, v), un, axpy(-space.omega(z, un), v, z));
        };
        LogicalFactor f;
        f.kind = FactorKind::CV;
        f.x_name = space.name(v);
        f.z_name = space.name(u);
        f.x_op = space.op(v);
        f.z_op = space.op(u);
        f.pairing = symplectic_value(f.x_op, f.z_op);
        cvs.push_back(std::move(f));
        std::vector<PVec> rest;
        for (size_t k = 0; k < cont.size(); ++k)
          if (k != i && k != j) rest.push_back(project(cont[k]));
        cont = std::move(rest);
        for (auto& l : lat) l = project(l);
      }
  }

  // Remaining continuous directions commute among themselves. Those that also
  // commute with every lattice string must be stabilizers; the rest are rotors.
  std::vector<PVec> dirs;
  Mat<Integer> N;
  for (const auto& v : cont) {
    std::vector<QuadScalar> row;
    for (const auto& l : lat) row.push_back(space.omega(v, l));
    auto nz = std::find_if(row.begin(), row.end(), [](const QuadScalar& x) { return !x.is_zero(); });
    if (nz == row.end()) {
      if (!in_real_span(space.op(v), S))
        throw NonMaximal(space.name(v) + " commutes with every logical but is not a stabilizer");
      continue;
    }
    QuadScalar kappa = *nz;
    std::vector<Rational> ratios;
    for (const auto& x : row) ratios.push_back(require_rational(x / kappa, "rotor pairing ratio"));
    Integer m = lcm_den(ratios);
    Integer gc = 0;
    for (const auto& x : ratios) mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), Integer(x * Rational(m)).get_mpz_t());
    std::vector<Integer> irow;
    for (const auto& x : ratios) irow.push_back(Integer(x * Rational(m) / Rational(gc)));
    dirs.push_back(scaled(QuadScalar(Rational(m) / Rational(gc)) / kappa, v));
    N.push_back(std::move(irow));
  }

  size_t nrot = 0;
  if (!dirs.empty()) {
    Smith sm = smith_normal_form(N);
    std::vector<PVec> nd, nl;
    for (size_t i = 0; i < dirs.size(); ++i) {
      PVec v(R);
      for (size_t k = 0; k < dirs.size(); ++k)
        if (sm.U[i][k] != 0) v = axpy(QuadScalar(Rational(sm.U[i][k])), dirs[k], v);
      nd.push_back(std::move(v));
    }
    for (size_t k = 0; k < lat.size(); ++k) {
      PVec l(R);
      for (size_t j = 0; j < lat.size(); ++j)
        if (sm.V[j][k] != 0) l = axpy(QuadScalar(Rational(sm.V[j][k])), lat[j], l);
      nl.push_back(std::move(l));
    }
    lat = std::move(nl);
    auto diag = sm.diagonal();
    std::vector<PVec> us;
    for (size_t i = 0; i < nd.size(); ++i) {
      if (i >= diag.size() || diag[i] == 0) {
        if (!in_real_span(space.op(nd[i]), S))
          throw NonMaximal(space.name(nd[i]) + " commutes with every logical but is not a stabilizer");
        continue;
      }
      // u pairs to 1 with its lattice partner, so it lies in the radical.
      PVec u = scaled(QuadScalar(Rational(-1) / Rational(diag[i])), nd[i]);
      if (!stabilizer_membership(space.op(u), S))
        throw NonMaximal("rotor period " + space.name(u) + " is not a stabilizer");
      us.push_back(std::move(u));
    }
    nrot = us.size();
    // Decouple every lattice string from the rotor integer parts.
    for (size_t k = 0; k < lat.size(); ++k)
      for (size_t i = 0; i < nrot; ++i)
        if (i != k) lat[k] = axpy(space.omega(lat[k], lat[i]), us[i], lat[k]);
    for (size_t i = 0; i < nrot; ++i) {
      LogicalFactor f;
      f.kind = FactorKind::Rotor;
      f.x_name = space.name(lat[i]);
      f.z_name = space.name(us[i]);
      f.x_op = space.op(lat[i]);
      f.z_op = space.op(us[i]);
      f.pairing = symplectic_value(f.x_op, f.z_op);
      f.period = QuadScalar(1);
      rotors.push_back(std::move(f));
    }
  }

  // Finite part: lattice strings modulo the radical of their pairing.
  std::vector<PVec> fin(lat.begin() + static_cast<long>(nrot), lat.end());
  if (!fin.empty()) {
    const size_t a = fin.size();
    Mat<Rational> P(a, std::vector<Rational>(a));
    std::vector<Rational> flat;
    for (size_t i = 0; i < a; ++i)
      for (size_t j = 0; j < a; ++j) {
        P[i][j] = require_rational(space.omega(fin[i], fin[j]), "logical pairing");
        flat.push_back(P[i][j]);
      }
    Integer q = lcm_den(flat);
    Mat<Integer> Pi(a, std::vector<Integer>(a));
    for (size_t i = 0; i < a; ++i)
      for (size_t j = 0; j < a; ++j) Pi[i][j] = Integer(P[i][j] * Rational(q));
    Smith sm = smith_normal_form(Pi);
    auto diag = sm.diagonal();
    diag.resize(a, 0);
    std::vector<long> orders;
    std::vector<PVec> gens;
    for (size_t i = 0; i < a; ++i) {
      Integer gd;
      mpz_gcd(gd.get_mpz_t(), diag[i].get_mpz_t(), q.get_mpz_t());
      Integer ni = q / gd;
      PVec e(R);
      for (size_t j = 0; j < a; ++j)
        if (sm.V[j][i] != 0) e = axpy(QuadScalar(Rational(sm.V[j][i])), fin[j], e);
      PVec rad = scaled(QuadScalar(Rational(ni)), e);
      if (!stabilizer_membership(space.op(rad), S))
        throw NonMaximal(space.name(rad) + " commutes with every logical but is not a stabilizer");
      if (ni == 1) continue;
      if (!ni.fits_slong_p()) throw Error("logical order out of range");
      orders.push_back(ni.get_si());
      gens.push_back(std::move(e));
    }
    if (!gens.empty()) {
      Mat<Rational> G(gens.size(), std::vector<Rational>(gens.size()));
      for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
          G[i][j] = space.omega(gens[i], gens[j]).rational_part();
      auto combine = [&](const std::vector<long>& c) {
        PVec p(R);
        for (size_t i = 0; i < c.size(); ++i)
          if (c[i]) p = axpy(QuadScalar(c[i]), gens[i], p);
        return p;
      };
      for (const auto& fp : finite_symplectic_basis(orders, G)) {
        PVec x = combine(fp.x), y = combine(fp.y);
        LogicalFactor f;
        f.kind = FactorKind::Qudit;
        f.dimension = fp.order;
        f.x_name = space.name(x);
        f.z_name = space.name(y);
        f.x_op = space.op(x);
        f.z_op = space.op(y);
        f.pairing = symplectic_value(f.x_op, f.z_op);
        qudits.push_back(std::move(f));
      }
      std::stable_sort(qudits.begin(), qudits.end(),
                       [](const LogicalFactor& l, const LogicalFactor& r) {
                         return l.dimension < r.dimension;
                       });
    }
  }

  for (auto* group : {&qudits, &rotors, &cvs})
    for (auto& f : *group) out.factors.push_back(std::move(f));
  for (const auto& f : out.factors)
    if (f.kind == FactorKind::Qudit) out.finite_dimension *= f.dimension;

  std::vector<const DisplacementVector*> ops;
  for (const auto& f : out.factors) {
    ops.push_back(&f.x_op);
    ops.push_back(&f.z_op);
  }
  for (const auto* u : ops) {
    std::vector<PhaseFraction> row;
    for (const auto* v : ops) row.push_back(symplectic_phase(*u, *v));
    out.commutation.push_back(std::move(row));
  }
  return out;
}

}  // namespace cvcond
