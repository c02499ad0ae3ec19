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

#include "cvcond/condensation.hpp"

#include "cvcond/errors.hpp"

namespace cvcond {

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Z: return "Z";
    case SubgroupClass::ZxZ: return "ZxZ";
    case SubgroupClass::R: return "R";
    case SubgroupClass::ZxR: return "ZxR";
  }
  return "?";
}

std::string to_string(HoppingBasis b) {
  return b == HoppingBasis::SingleSite ? "single-site" : "composite";
}

bool BosonSubgroup::has_continuous() const {
  for (bool c : continuous)
    if (c) return true;
  return false;
}

namespace {

QuadScalar det2(const FluxCharge& x, const FluxCharge& y) {
  return x.flux_hat * y.charge - x.charge * y.flux_hat;
}

long field_of(const std::vector<FluxCharge>& gens) {
  long d = 0;
  for (const auto& g : gens)
    for (const auto* s : {&g.flux_hat, &g.charge}) {
      if (s->discriminant() == 0) continue;
      if (d != 0 && d != s->discriminant())
        throw DiscriminantMismatch("generators live in different quadratic fields");
      d = s->discriminant();
    }
  return d;
}

Integer as_integer(const QuadScalar& x, const char* what) {
  if (!x.is_integer()) throw NonIntegerRelationMatrix(std::string(what) + " = " + x.str());
  return x.rational_part().get_num();
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer out of range");
  return z.get_si();
}

}  // namespace

BosonSubgroup validate_subgroup(const std::vector<FluxCharge>& generators,
                                const std::vector<bool>& continuous) {
  if (generators.empty() || generators.size() > 2)
    throw DependentGenerators("expected 1 or 2 generators, got " +
                              std::to_string(generators.size()));
  BosonSubgroup B;
  B.generators = generators;
  B.continuous = continuous;
  B.continuous.resize(generators.size(), false);
  B.discriminant = field_of(generators);

  for (size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.is_zero()) throw DependentGenerators("zero generator");
    QuadScalar s = spin_value(g);
    B.spins.push_back(s);
    // A continuous family alpha*g has spin alpha^2 s, so s must vanish.
    bool ok = B.continuous[i] ? s.is_zero() : s.is_integer();
    if (!ok) throw NonBoson(g.str() + " has spin " + phase_reduce(s).str());
    if (!g.is_pure()) B.basis = HoppingBasis::Composite;
  }

  if (generators.size() == 2) {
    const auto& g0 = generators[0];
    const auto& g1 = generators[1];
    QuadScalar x = braiding_value(g0, g1);
    B.cross = x;
    bool any_cont = B.continuous[0] || B.continuous[1];
    if (any_cont ? !x.is_zero() : !x.is_integer())
      throw NontrivialMutualBraiding(g0.str() + " and " + g1.str() + " braid by " +
                                     phase_reduce(x).str());
    if (det2(g0, g1).is_zero()) throw DependentGenerators(g0.str() + " and " + g1.str());
    B.cross_even = x.is_integer() && x.rational_part().get_num() % 2 == 0;
    if (B.basis == HoppingBasis::Composite && !B.cross_even)
      throw OddCrossBraiding("cross form " + x.str() + " is odd");
    if (B.continuous[0] && B.continuous[1])
      B.subgroup_class = SubgroupClass::R;
    else if (any_cont)
      B.subgroup_class = SubgroupClass::ZxR;
    else
      B.subgroup_class = SubgroupClass::ZxZ;
  } else {
    B.subgroup_class = B.continuous[0] ? SubgroupClass::R : SubgroupClass::Z;
  }
  return B;
}

DeconfinedSet deconfined_set(const BosonSubgroup& B) {
  DeconfinedSet A;
  if (B.has_continuous()) {
    // Only directions orthogonal to every generator survive; the continuous
    // generator itself spans them.
    for (size_t i = 0; i < B.rank(); ++i)
      if (B.continuous[i]) A.continuous_direction = B.generators[i];
    return A;
  }
  if (B.rank() == 1) {
    const auto& g = B.generators[0];
    A.continuous_direction = FluxCharge(g.flux_hat, -g.charge);
    if (!g.flux_hat.is_zero())
      A.discrete_generators.push_back({QuadScalar(0), QuadScalar(1) / g.flux_hat});
    else
      A.discrete_generators.push_back({QuadScalar(1) / g.charge, QuadScalar(0)});
    return A;
  }
  // b(g_i, x) = c_i x_f + f_i x_c. Invert the 2x2 system for unit targets.
  const auto& g0 = B.generators[0];
  const auto& g1 = B.generators[1];
  QuadScalar det = g0.charge * g1.flux_hat - g0.flux_hat * g1.charge;
  // inverse of [[c0, f0], [c1, f1]] is [[f1, -f0], [-c1, c0]] / det
  A.discrete_generators.push_back({g1.flux_hat / det, -g1.charge / det});
  A.discrete_generators.push_back({-g0.flux_hat / det, g0.charge / det});
  return A;
}

namespace {

void fill_theory(CondensationOutcome& o, const std::vector<long>& orders) {
  FiniteAnyonTheory& t = o.finite_theory;
  t.cyclic_orders = orders;
  t.generator_spins.clear();
  t.braiding_matrix.assign(orders.size(), std::vector<PhaseFraction>(orders.size()));
  for (size_t i = 0; i < orders.size(); ++i) {
    t.generator_spins.push_back(spin(o.finite_generators[i]));
    for (size_t j = 0; j < orders.size(); ++j)
      t.braiding_matrix[i][j] = braiding(o.finite_generators[i], o.finite_generators[j]);
  }
}

void check_contained(const DeconfinedSet& A, const BosonSubgroup& B) {
  for (const auto& g : B.generators) {
    for (const auto& a : A.discrete_generators)
      if (!braiding(g, a).is_trivial())
        throw BNotContained(a.str() + " braids with " + g.str());
    if (A.continuous_direction && !braiding_value(g, *A.continuous_direction).is_zero())
      throw BNotContained("continuous direction braids with " + g.str());
    if (!braiding(g, g).is_trivial()) throw BNotContained(g.str());
  }
}

}  // namespace

CondensationOutcome quotient(const DeconfinedSet& A, const BosonSubgroup& B) {
  check_contained(A, B);
  CondensationOutcome o;
  o.B = B;
  o.A = A;

  if (B.has_continuous()) {
    o.kind = CaseKind::Trivial;
    o.warnings.push_back(
        "continuous condensate: the condensed phase has only topologically trivial "
        "excitations");
    return o;
  }

  if (B.rank() == 1) {
    const auto& g = B.generators[0];
    const FluxCharge& t = *A.continuous_direction;
    QuadScalar s = B.spins[0];
    if (s.is_zero()) {
      // Z x U(1): the line through g is compactified with period g.
      o.kind = CaseKind::FluxOnly;
      o.free_generators = A.discrete_generators;
      QuadScalar period = g.flux_hat.is_zero() ? (g.charge / t.charge) : (g.flux_hat / t.flux_hat);
      o.continuous_factor = ContinuousFactor{true, t, braiding_value(t, t), period.abs()};
      return o;
    }
    // Z_{2|s|} x R generated by u = g / 2s and the line through t.
    o.kind = CaseKind::Composite1;
    FluxCharge u = (QuadScalar(1) / (QuadScalar(2) * s)) * g;
    o.finite_generators = {u};
    long order = to_long(abs(as_integer(QuadScalar(2) * s, "2s")));
    fill_theory(o, {order});
    o.invariant_factors = {Integer(order)};
    o.continuous_factor = ContinuousFactor{false, t, braiding_value(t, t), std::nullopt};
    o.warnings.push_back(
        "the [q, alpha] label uses the representative q*u + alpha*(f, -c) whose continuous "
        "part is deconfined; the alternative sign convention is not used");
    return o;
  }

  // Rank 2: coordinates of B generators in the A basis are b(g_i, g_j).
  Mat<Integer> R(2, Vec<Integer>(2));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      R[i][j] = as_integer(braiding_value(B.generators[i], B.generators[j]), "relation entry");
  o.relation_matrix = R;
  Smith S = smith_normal_form(R);
  o.invariant_factors = S.diagonal();
  if (o.invariant_factors[0] * o.invariant_factors[1] == 0)
    throw DependentGenerators("singular relation matrix");

  std::vector<long> orders;
  if (R[0][1] == 0) {
    // Already a direct sum; keep the natural generators.
    o.label_transform = {{1, 0}, {0, 1}};
    for (size_t i = 0; i < 2; ++i) {
      long d = to_long(abs(R[i][i]));
      if (d == 1) continue;
      orders.push_back(d);
      o.finite_generators.push_back(A.discrete_generators[i]);
    }
  } else {
    // Quotient by the row span of R; new cyclic generators are rows of V^-1.
    o.label_transform = S.V;
    Integer detV = S.V[0][0] * S.V[1][1] - S.V[0][1] * S.V[1][0];
    Mat<Integer> Vinv = {{S.V[1][1] * detV, -S.V[0][1] * detV},
                         {-S.V[1][0] * detV, S.V[0][0] * detV}};
    for (size_t i = 0; i < 2; ++i) {
      long d = to_long(o.invariant_factors[i]);
      if (d == 1) continue;
      orders.push_back(d);
      FluxCharge f = QuadScalar(Rational(Vinv[i][0])) * A.discrete_generators[0] +
                     QuadScalar(Rational(Vinv[i][1])) * A.discrete_generators[1];
      o.finite_generators.push_back(f);
    }
  }
  fill_theory(o, orders);

  const bool pure = B.basis == HoppingBasis::SingleSite;
  if (pure) {
    o.kind = CaseKind::PureFluxCharge;
  } else if (B.cross->is_zero()) {
    o.kind = CaseKind::Double;
    o.warnings.push_back(
        "the commonly quoted closed form pi(k1 k1'/2n - k2 k2'/2m) for the condensed braiding "
        "is off by a factor of 2; braiding values here are evaluated directly on "
        "representatives");
  } else {
    o.kind = CaseKind::EvenK;
  }
  return o;
}

namespace {

Integer require_integer(const QuadScalar& x, const FluxCharge& orig) {
  if (!x.is_integer()) throw Confined(orig.str() + " is not deconfined");
  return x.rational_part().get_num();
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::vector<QuadScalar> coset_normal_form(const FluxCharge& x, const CondensationOutcome& o) {
  const BosonSubgroup& B = o.B;
  if (o.kind == CaseKind::Trivial) {
    for (size_t i = 0; i < B.rank(); ++i)
      if (!braiding_value(B.generators[i], x).is_zero())
        throw Confined(x.str() + " is not deconfined");
    return {};
  }
  for (size_t i = 0; i < B.rank(); ++i)
    if (!braiding(B.generators[i], x).is_trivial()) throw Confined(x.str() + " is not deconfined");

  if (B.rank() == 1) {
    // Solve x = q * p + alpha * t in the 2x2 basis (p, t).
    const FluxCharge& p = o.kind == CaseKind::FluxOnly ? o.free_generators[0] : o.finite_generators[0];
    const FluxCharge& t = o.continuous_factor->direction;
    QuadScalar det = det2(p, t);
    QuadScalar q = det2(x, t) / det;
    QuadScalar alpha = det2(p, x) / det;
    Integer qi = require_integer(q, x);
    if (o.kind == CaseKind::FluxOnly) {
      QuadScalar per = *o.continuous_factor->period;
      QuadScalar k = QuadScalar(Rational((alpha / per).floor()));
      return {QuadScalar(Rational(qi)), alpha - k * per};
    }
    Integer order = o.finite_theory.cyclic_orders[0];
    return {QuadScalar(Rational(mod_pos(qi, order))), alpha};
  }

  // Rank 2: A-coordinates k_j = b(g_j, x), then labels k * V mod orders.
  Integer k0 = require_integer(braiding_value(B.generators[0], x), x);
  Integer k1 = require_integer(braiding_value(B.generators[1], x), x);
  const auto& V = o.label_transform;
  Integer y0 = k0 * V[0][0] + k1 * V[1][0];
  Integer y1 = k0 * V[0][1] + k1 * V[1][1];
  std::vector<QuadScalar> label;
  const auto& R = o.relation_matrix;
  std::vector<Integer> mods;
  if (R[0][1] == 0)
    mods = {abs(R[0][0]), abs(R[1][1])};
  else
    mods = o.invariant_factors;
  Integer ys[2] = {y0, y1};
  for (size_t i = 0; i < 2; ++i) {
    if (mods[i] == 1) continue;
    label.push_back(QuadScalar(Rational(mod_pos(ys[i], mods[i]))));
  }
  return label;
}

FluxCharge coset_representative(const std::vector<QuadScalar>& label,
                                const CondensationOutcome& o) {
  FluxCharge r;
  if (o.kind == CaseKind::Trivial) return r;
  if (o.B.rank() == 1) {
    const FluxCharge& p = o.kind == CaseKind::FluxOnly ? o.free_generators[0] : o.finite_generators[0];
    return label[0] * p + label[1] * o.continuous_factor->direction;
  }
  for (size_t i = 0; i < label.size(); ++i) r += label[i] * o.finite_generators[i];
  return r;
}

Classification classify(const CondensationOutcome& o) {
  const auto& B = o.B;
  switch (o.kind) {
    case CaseKind::Trivial:
      return {"trivial (continuous condensate)", "nothing"};
    case CaseKind::FluxOnly:
      return {"homological-rotor / U(1) gauge theory", "two quantum rotors"};
    case CaseKind::Composite1: {
      Integer level = 2 * B.spins[0].rational_part().get_num();
      return {"U(1)_" + level.get_str(),
              "qudit " + Integer(abs(level)).get_str() + " + one CV"};
    }
    case CaseKind::PureFluxCharge: {
      long n = o.finite_theory.order();
      long root = 1;
      while (root * root < n) ++root;
      if (root * root != n || o.relation_matrix[0][0] != 0 || o.relation_matrix[1][1] != 0)
        throw Unclassified("pure generators with relation matrix that is not hyperbolic");
      return {"Z_" + std::to_string(root) + " gauge theory (toric-GKP)",
              "two qudits of dimension " + std::to_string(root)};
    }
    case CaseKind::Double: {
      Integer s0 = B.spins[0].rational_part().get_num();
      Integer s1 = B.spins[1].rational_part().get_num();
      if (sgn(s0) * sgn(s1) >= 0)
        throw Unclassified("chiral U(1) x U(1) with same-sign levels");
      Integer n = s0 > 0 ? s0 : s1, m = s0 > 0 ? -s1 : -s0;
      return {"U(1)_" + Integer(2 * n).get_str() + " x U(1)_-" + Integer(2 * m).get_str(),
              "qudits " + Integer(2 * n).get_str() + " and " + Integer(2 * m).get_str()};
    }
    case CaseKind::EvenK: {
      const auto& R = o.relation_matrix;
      Integer det = R[0][0] * R[1][1] - R[0][1] * R[1][0];
      if (det >= 0) throw Unclassified("even K matrix with non-negative determinant");
      return {"non-chiral even-K",
              "finite theory of order " + Integer(abs(det)).get_str()};
    }
  }
  throw Unclassified("unknown case");
}

CondensationOutcome condense(const std::vector<FluxCharge>& generators,
                             const std::vector<bool>& continuous) {
  BosonSubgroup B = validate_subgroup(generators, continuous);
  DeconfinedSet A = deconfined_set(B);
  CondensationOutcome o = quotient(A, B);
  Classification c = classify(o);
  o.classification_tag = c.tag;
  o.encoded_content = c.content;
  return o;
}

std::vector<FluxCharge> taxonomy_flux() { return {{QuadScalar(1), QuadScalar(0)}}; }

std::vector<FluxCharge> taxonomy_flux_charge(long n) {
  return {{QuadScalar(1), QuadScalar(0)}, {QuadScalar(0), QuadScalar(n)}};
}

std::vector<FluxCharge> taxonomy_composite(long n) { return {{QuadScalar(1), QuadScalar(n)}}; }

std::vector<FluxCharge> taxonomy_double(long n, long m) {
  if (n <= 0 || m <= 0) throw Error("double condensation needs n, m > 0");
  QuadScalar r = QuadScalar::sqrt_of(frac(m, n));
  QuadScalar nm = QuadScalar::sqrt_of(Rational(n * m));
  return {{QuadScalar(1), QuadScalar(n)}, {-r, nm}};
}

std::vector<FluxCharge> taxonomy_even_k(long n1, long n2, long np) {
  Integer disc = Integer(np) * np - Integer(n1) * n2;
  if (disc <= 0) throw Unclassified("even-K needs n'^2 > n1 n2");
  if (n1 == 0) throw Unclassified("even-K needs n1 != 0");
  QuadScalar root = QuadScalar::sqrt_of(Rational(disc));
  QuadScalar c2 = QuadScalar(np) + root;
  QuadScalar f2 = (QuadScalar(np) - root) / QuadScalar(n1);
  return {{QuadScalar(1), QuadScalar(n1)}, {f2, c2}};
}

}  // namespace cvcond
