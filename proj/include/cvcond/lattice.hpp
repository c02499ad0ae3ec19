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

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvcond/anyon.hpp"
#include "cvcond/condensation.hpp"
#include "cvcond/linalg.hpp"

namespace cvcond {

enum class Orient { H = 0, V = 1 };

struct EdgeCoord {
  Orient o;
  int i, j;
};

/// Periodic L x L square lattice.
///
/// Vertex (i, j) has i increasing east and j increasing north. The
/// horizontal edge h(i, j) runs (i, j) -> (i+1, j) and the vertical edge
/// v(i, j) runs (i, j) -> (i, j+1). Plaquette p(i, j) has lower-left corner
/// (i, j) and counterclockwise boundary h(i,j) + v(i+1,j) - h(i,j+1) - v(i,j).
class LatticeGeometry {
 public:
  explicit LatticeGeometry(int L);

  int L() const { return L_; }
  int num_vertices() const { return L_ * L_; }
  int num_edges() const { return 2 * L_ * L_; }
  int num_plaquettes() const { return L_ * L_; }

  int wrap(int x) const { return ((x % L_) + L_) % L_; }
  int vertex(int i, int j) const { return wrap(j) * L_ + wrap(i); }
  int plaquette(int i, int j) const { return wrap(j) * L_ + wrap(i); }
  int edge(Orient o, int i, int j) const {
    return 2 * (wrap(j) * L_ + wrap(i)) + static_cast<int>(o);
  }
  EdgeCoord edge_coord(int e) const;
  std::pair<int, int> vertex_coord(int v) const { return {v % L_, v / L_}; }
  std::pair<int, int> plaquette_coord(int p) const { return {p % L_, p / L_}; }

  int head(int e) const;
  int tail(int e) const;
  // o_e: +1 on vertical edges, -1 on horizontal edges.
  int orientation_sign(int e) const;

  // (edge, [de]_v) with head +1 and tail -1.
  std::vector<std::pair<int, int>> vertex_star(int v) const;
  // (edge, sign) for the counterclockwise boundary.
  std::vector<std::pair<int, int>> plaquette_boundary(int p) const;
  // The two plaquettes that contain e, as (plaquette, [dp]_e).
  std::array<std::pair<int, int>, 2> edge_cofaces(int e) const;
  // Vertex bound to plaquette p(i, j) for composites: (i + 1, j).
  int south_east(int p) const;

  bool boundary_of_boundary_zero() const;
  friend bool operator==(const LatticeGeometry& a, const LatticeGeometry& b) {
    return a.L_ == b.L_;
  }

 private:
  int L_;
};

/// Exponent vector of a displacement operator, modulo global phase.
/// x_hat is the X exponent divided by 2*pi; z is the Z exponent.
struct DisplacementVector {
  int L = 0;
  std::vector<QuadScalar> x_hat;
  std::vector<QuadScalar> z;

  DisplacementVector() = default;
  explicit DisplacementVector(const LatticeGeometry& g)
      : L(g.L()), x_hat(g.num_edges()), z(g.num_edges()) {}

  DisplacementVector& operator+=(const DisplacementVector& o);
  DisplacementVector& operator-=(const DisplacementVector& o);
  friend DisplacementVector operator+(DisplacementVector a, const DisplacementVector& b) {
    return a += b;
  }
  friend DisplacementVector operator-(DisplacementVector a, const DisplacementVector& b) {
    return a -= b;
  }
  friend DisplacementVector operator*(const QuadScalar& k, DisplacementVector a);
  friend bool operator==(const DisplacementVector& a, const DisplacementVector& b) = default;

  bool is_identity() const;
  std::vector<int> support() const;
  // (x_hat..., z...) as one vector of length 2|E|.
  Vec<QuadScalar> flatten() const;
};

QuadScalar symplectic_value(const DisplacementVector& u, const DisplacementVector& v);
PhaseFraction symplectic_phase(const DisplacementVector& u, const DisplacementVector& v);

// Parent gauge theory.
DisplacementVector vertex_term(const LatticeGeometry& g, int v, const QuadScalar& phi_hat);
DisplacementVector plaquette_term(const LatticeGeometry& g, int p, const QuadScalar& c);
QuadScalar charge_at(const LatticeGeometry& g, const DisplacementVector& op, int v);
QuadScalar flux_at(const LatticeGeometry& g, const DisplacementVector& op, int p);

using Cochain = std::map<int, int>;  // edge -> integer coefficient

// Edges along a walk on the direct lattice, signed by traversal direction.
Cochain direct_path(const LatticeGeometry& g, int i, int j, const std::string& moves);
// Edges crossed by a walk on the dual lattice, signed so that an X string
// moves flux from the first plaquette to the last.
Cochain dual_path(const LatticeGeometry& g, int i, int j, const std::string& moves);

DisplacementVector z_string(const LatticeGeometry& g, const Cochain& path, const QuadScalar& c);
DisplacementVector x_string(const LatticeGeometry& g, const Cochain& path,
                            const QuadScalar& phi_hat);

// ---- hopping patterns ----

struct DressingTerm {
  Orient o;
  int dx, dy;
  Rational coef;
  friend bool operator==(const DressingTerm&, const DressingTerm&) = default;
};

struct OrientPattern {
  Rational x_coef{1};
  std::vector<DressingTerm> dressing;  // Z exponent = coef * charge
  friend bool operator==(const OrientPattern&, const OrientPattern&) = default;
};

struct PsiEntry {
  Orient from, to;
  int dx, dy;
  int eps;  // f(C_e(g), C_e'(h)) = eps * b(g, h) / 2
};

struct HoppingPattern {
  HoppingBasis basis = HoppingBasis::SingleSite;
  OrientPattern h, v;

  const OrientPattern& of(Orient o) const { return o == Orient::H ? h : v; }
  OrientPattern& of(Orient o) { return o == Orient::H ? h : v; }
  // Per orientation: (edge-offset, x-coefficient, z-coefficient) triples.
  std::string dump() const;
  size_t body_count(Orient o) const;
};

DisplacementVector hop(const LatticeGeometry& g, const HoppingPattern& p, int e,
                       const FluxCharge& x);
DisplacementVector operator_from_cochain(const LatticeGeometry& g,
                                         const std::map<int, FluxCharge>& coefficients,
                                         const HoppingPattern& p);
// Coboundary of a vertex: sum over the star of [de]_v C_e(x).
DisplacementVector vertex_coboundary(const LatticeGeometry& g, const HoppingPattern& p, int v,
                                     const FluxCharge& x);

std::vector<PsiEntry> psi_table(const HoppingPattern& p);

struct PatternCheck {
  bool syndrome_ok = false;       // (i)
  bool psi_ok = false;            // (ii)
  bool generators_commute = false;  // (iii)
  bool strings_ok = false;        // (iv)
  bool t_junction_ok = false;
  std::vector<std::string> failures;
  bool ok() const {
    return syndrome_ok && psi_ok && generators_commute && strings_ok && t_junction_ok;
  }
};

PatternCheck check_pattern(const HoppingPattern& p, const BosonSubgroup& B);
HoppingPattern synthesize_hopping(const BosonSubgroup& B, const LatticeGeometry& geometry);
PhaseFraction t_junction_spin(const HoppingPattern& p, const FluxCharge& x);

// ---- stabilizer models ----

enum class AnchorKind { Vertex, Edge, Plaquette };

struct StabilizerFamily {
  std::string name;
  AnchorKind anchor = AnchorKind::Vertex;
  size_t r = 1;  // number of real parameters
  std::function<DisplacementVector(int, const Vec<QuadScalar>&)> build;
  QuantizedDomain domain;
};

struct StabilizerGenerator {
  std::string family;
  AnchorKind anchor = AnchorKind::Vertex;
  int site = 0;
  int sample = 0;
  bool continuous = false;
  DisplacementVector op;
  std::string label() const;
};

struct ParentModel {
  StabilizerFamily A, B;
};
ParentModel build_parent(const LatticeGeometry& g);

// Restricts each family's parameters to those commuting with every hop.
std::vector<StabilizerFamily> centralizer(const LatticeGeometry& g,
                                          std::vector<StabilizerFamily> families,
                                          const std::vector<StabilizerGenerator>& hops);

std::vector<StabilizerGenerator> sample_family(const LatticeGeometry& g,
                                               const StabilizerFamily& f);

struct StabilizerModel {
  LatticeGeometry geometry{2};
  BosonSubgroup B;
  HoppingPattern pattern;
  std::vector<StabilizerFamily> families;
  std::vector<StabilizerGenerator> hops;
  std::vector<StabilizerGenerator> generators;  // hops followed by family samples
};

StabilizerModel build_code(const BosonSubgroup& B, int L);
StabilizerModel build_code(const BosonSubgroup& B, int L, const HoppingPattern& pattern);

struct CommutationReport {
  bool pass = true;
  size_t pairs_checked = 0;
  std::vector<std::pair<size_t, size_t>> violations;
  std::vector<std::string> violation_labels;
};
CommutationReport verify_commuting(const std::vector<StabilizerGenerator>& gens);

bool stabilizer_membership(const DisplacementVector& op, const StabilizerModel& S);

enum class SyndromeClass { Trivial, DeconfinedString, Confined };
std::string to_string(SyndromeClass c);

struct Syndrome {
  std::map<std::string, std::vector<int>> violated;  // family -> anchors
  SyndromeClass kind = SyndromeClass::Trivial;
  size_t count() const;
};
Syndrome syndrome(const DisplacementVector& op, const StabilizerModel& S);

// ---- logical content ----

struct HomologyBasis {
  Cochain eta1, eta2;      // cycles
  Cochain gamma1, gamma2;  // cocycles
  std::array<std::array<int, 2>, 2> intersection() const;
};
HomologyBasis standard_homology(const LatticeGeometry& g);

// Composite string along a cochain: sum of gamma_e C_e(x).
DisplacementVector cochain_string(const LatticeGeometry& g, const HoppingPattern& p,
                                  const Cochain& gamma, const FluxCharge& x);

enum class FactorKind { Qudit, Rotor, CV };
std::string to_string(FactorKind k);

struct LogicalFactor {
  FactorKind kind = FactorKind::Qudit;
  long dimension = 0;  // qudits only
  std::string x_name, z_name;
  DisplacementVector x_op, z_op;
  QuadScalar pairing;  // f(x_op, z_op), unreduced
  std::optional<QuadScalar> period;  // rotor compactification of the continuous member
};

struct LogicalContent {
  std::vector<LogicalFactor> factors;
  long finite_dimension = 1;
  // Phase fractions between the operators x1, z1, x2, z2, ...
  std::vector<std::vector<PhaseFraction>> commutation;
  std::string summary() const;
};

LogicalContent logical_operators(const StabilizerModel& S, const HomologyBasis& basis);

}  // namespace cvcond
