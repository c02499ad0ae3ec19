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

#include "cvcond/finite_anyon.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <deque>
#include <numeric>
#include <set>

#include "cvcond/errors.hpp"

namespace cvcond {

long FiniteAnyonTheory::order() const {
  long n = 1;
  for (long d : cyclic_orders) n *= d;
  return n;
}

bool FiniteAnyonTheory::well_defined() const {
  const size_t k = cyclic_orders.size();
  if (generator_spins.size() != k || braiding_matrix.size() != k) return false;
  for (size_t i = 0; i < k; ++i) {
    if (!(braiding_matrix[i][i] == 2 * generator_spins[i])) return false;
    for (size_t j = 0; j < k; ++j) {
      if (!(cyclic_orders[i] * braiding_matrix[i][j]).is_trivial()) return false;
      if (!(braiding_matrix[i][j] == braiding_matrix[j][i])) return false;
    }
  }
  return true;
}

FiniteAnyonTheory FiniteAnyonTheory::product(const FiniteAnyonTheory& a,
                                             const FiniteAnyonTheory& b) {
  FiniteAnyonTheory t;
  const size_t na = a.cyclic_orders.size(), nb = b.cyclic_orders.size();
  t.cyclic_orders = a.cyclic_orders;
  t.cyclic_orders.insert(t.cyclic_orders.end(), b.cyclic_orders.begin(), b.cyclic_orders.end());
  t.generator_spins = a.generator_spins;
  t.generator_spins.insert(t.generator_spins.end(), b.generator_spins.begin(),
                           b.generator_spins.end());
  t.braiding_matrix.assign(na + nb, std::vector<PhaseFraction>(na + nb));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) t.braiding_matrix[i][j] = a.braiding_matrix[i][j];
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j) t.braiding_matrix[na + i][na + j] = b.braiding_matrix[i][j];
  return t;
}

PhaseFraction anyon_spin(const FiniteAnyonTheory& t, const AnyonLabel& a) {
  QuadScalar v;
  for (size_t i = 0; i < a.size(); ++i) {
    v += QuadScalar(a[i] * a[i]) * t.generator_spins[i].value();
    for (size_t j = i + 1; j < a.size(); ++j)
      v += QuadScalar(a[i] * a[j]) * t.braiding_matrix[i][j].value();
  }
  return phase_reduce(v);
}

PhaseFraction anyon_braiding(const FiniteAnyonTheory& t, const AnyonLabel& a,
                             const AnyonLabel& b) {
  QuadScalar v;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      v += QuadScalar(a[i] * b[j]) * t.braiding_matrix[i][j].value();
  return phase_reduce(v);
}

namespace {

std::vector<AnyonLabel> all_labels(const FiniteAnyonTheory& t) {
  std::vector<AnyonLabel> out{AnyonLabel{}};
  for (long d : t.cyclic_orders) {
    std::vector<AnyonLabel> next;
    for (const auto& l : out)
      for (long k = 0; k < d; ++k) {
        AnyonLabel m = l;
        m.push_back(k);
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<AnyonEntry> enumerate_anyons(const FiniteAnyonTheory& t) {
  std::vector<AnyonEntry> out;
  for (auto& l : all_labels(t)) out.push_back({l, anyon_spin(t, l)});
  return out;
}

bool is_lagrangian(const FiniteAnyonTheory& t, const std::vector<AnyonLabel>& elements) {
  std::set<AnyonLabel> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) return false;
  if (static_cast<long>(set.size() * set.size()) != t.order()) return false;
  for (const auto& a : set) {
    if (!anyon_spin(t, a).is_trivial()) return false;
    for (const auto& b : set) {
      if (!anyon_braiding(t, a, b).is_trivial()) return false;
      AnyonLabel c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % t.cyclic_orders[i];
      if (!set.count(c)) return false;
    }
  }
  return true;
}

std::vector<Subgroup> lagrangian_subgroups(const FiniteAnyonTheory& t) {
  const long n = t.order();
  if (n > 64) throw Error("lagrangian_subgroups supports groups of order <= 64");
  long root = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
  if (root * root != n) return {};

  auto labels = all_labels(t);
  auto index_of = [&](const AnyonLabel& l) {
    long idx = 0;
    for (size_t i = 0; i < l.size(); ++i) idx = idx * t.cyclic_orders[i] + l[i];
    return idx;
  };
  auto add = [&](long a, long b) {
    AnyonLabel c(labels[a].size());
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = (labels[a][i] + labels[b][i]) % t.cyclic_orders[i];
    return index_of(c);
  };
  auto join = [&](uint64_t mask, long g) {
    // H + <g> for a subgroup H.
    uint64_t out = mask;
    long m = g;
    while (true) {
      uint64_t shifted = 0;
      for (long h = 0; h < n; ++h)
        if (mask >> h & 1) shifted |= uint64_t{1} << add(h, m);
      if ((out | shifted) == out) break;
      out |= shifted;
      m = add(m, g);
    }
    return out;
  };

  std::set<uint64_t> seen{1};
  std::deque<uint64_t> queue{1};
  while (!queue.empty()) {
    uint64_t h = queue.front();
    queue.pop_front();
    for (long g = 0; g < n; ++g) {
      if (h >> g & 1) continue;
      uint64_t k = join(h, g);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }

  std::vector<Subgroup> out;
  for (uint64_t mask : seen) {
    if (std::popcount(mask) != root) continue;
    Subgroup s;
    for (long i = 0; i < n; ++i)
      if (mask >> i & 1) s.elements.push_back(labels[i]);
    if (!is_lagrangian(t, s.elements)) continue;
    uint64_t span = 1;
    for (long i = 0; i < n; ++i)
      if ((mask >> i & 1) && !(span >> i & 1)) {
        s.generators.push_back(labels[i]);
        span = join(span, i);
      }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using Poly = std::vector<long long>;

// a mod b for monic integer b.
Poly poly_mod(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    long long lead = a.back();
    size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  while (a.size() > db) {
    long long lead = a.back();
    size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
  }
  return q;
}

Poly cyclotomic(long m) {
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div(p, cyclotomic(d));
  return p;
}

bool is_zero_mod(const Poly& a, const Poly& phi) {
  for (long long c : poly_mod(a, phi))
    if (c != 0) return false;
  return true;
}

// Product in Z[x]/(x^M - 1).
Poly cyclic_mul(const Poly& a, const Poly& b, long M) {
  Poly c(M, 0);
  for (long i = 0; i < M; ++i)
    if (a[i])
      for (long j = 0; j < M; ++j)
        if (b[j]) c[(i + j) % M] += a[i] * b[j];
  return c;
}

}  // namespace

CentralCharge gauss_sum_central_charge(const FiniteAnyonTheory& t) {
  auto anyons = enumerate_anyons(t);
  const long N = static_cast<long>(anyons.size());
  bool rational = true;
  long den = 1;
  for (const auto& a : anyons) {
    if (!a.spin.value().is_rational()) {
      rational = false;
      break;
    }
    den = std::lcm(den, a.spin.value().rational_part().get_den().get_si());
  }

  std::complex<long double> z = 0;
  const long double two_pi = 2 * std::acos(-1.0L);
  for (const auto& a : anyons) {
    long double s = a.spin.value().to_long_double();
    z += std::polar(1.0L, two_pi * s);
  }
  long double norm = std::sqrt(static_cast<long double>(N));
  CentralCharge out;
  out.modulus = static_cast<double>(std::abs(z) / norm);

  if (rational && den <= 24) {
    const long M = std::lcm(den, 8L);
    Poly phi = cyclotomic(M);
    Poly P(M, 0), Pbar(M, 0);
    for (const auto& a : anyons) {
      Rational s = a.spin.value().rational_part() * Rational(M);
      long k = s.get_num().get_si() % M;
      P[k] += 1;
      Pbar[(M - k) % M] += 1;
    }
    Poly mod2 = cyclic_mul(P, Pbar, M);
    out.exact = true;
    if (is_zero_mod(mod2, phi)) {
      out.degenerate = true;
      return out;
    }
    Poly diff = mod2;
    diff[0] -= N;
    if (!is_zero_mod(diff, phi))
      throw NondegenerateCheckFailed("|Gauss sum|^2 != |A|; modulus " + std::to_string(out.modulus));
    // P^2 = N * zeta_4^c fixes c mod 4.
    Poly sq = cyclic_mul(P, P, M);
    int c4 = -1;
    for (int c = 0; c < 4; ++c) {
      Poly d = sq;
      d[(M / 4 * c) % M] -= N;
      if (is_zero_mod(d, phi)) c4 = c;
    }
    if (c4 < 0) throw NondegenerateCheckFailed("Gauss sum phase is not an eighth root of unity");
    // Choose between c and c + 4 by the sign of the float sum.
    long double ang = two_pi * c4 / 8;
    std::complex<long double> ref = std::polar(1.0L, ang);
    long double dot = (z * std::conj(ref)).real();
    out.c_minus_mod8 = dot > 0 ? c4 : c4 + 4;
    return out;
  }

  const long double tol = 1e-9L;
  long double mod = std::abs(z) / norm;
  if (mod < tol) {
    out.degenerate = true;
    return out;
  }
  if (std::abs(mod - 1) > tol)
    throw NondegenerateCheckFailed("Gauss sum modulus " + std::to_string(out.modulus));
  long double eighths = std::arg(z) / two_pi * 8;
  long r = std::lround(eighths);
  if (std::abs(eighths - r) > 1e-6L)
    throw NondegenerateCheckFailed("Gauss sum phase is not an eighth root of unity");
  out.c_minus_mod8 = static_cast<int>(((r % 8) + 8) % 8);
  return out;
}

FiniteAnyonTheory toric_code_theory(long n) {
  FiniteAnyonTheory t;
  t.cyclic_orders = {n, n};
  t.generator_spins = {PhaseFraction(), PhaseFraction()};
  PhaseFraction b(QuadScalar(frac(1, n)));
  t.braiding_matrix = {{PhaseFraction(), b}, {b, PhaseFraction()}};
  return t;
}

FiniteAnyonTheory cyclic_theory(long order, const PhaseFraction& s) {
  FiniteAnyonTheory t;
  t.cyclic_orders = {order};
  t.generator_spins = {s};
  t.braiding_matrix = {{2 * s}};
  return t;
}

}  // namespace cvcond
