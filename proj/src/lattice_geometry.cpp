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

#include "cvcond/errors.hpp"
#include "cvcond/lattice.hpp"

namespace cvcond {

LatticeGeometry::LatticeGeometry(int L) : L_(L) {
  if (L < 2) throw GeometryMismatch("lattice size must be at least 2");
}

EdgeCoord LatticeGeometry::edge_coord(int e) const {
  int cell = e / 2;
  return {static_cast<Orient>(e % 2), cell % L_, cell / L_};
}

int LatticeGeometry::tail(int e) const {
  auto c = edge_coord(e);
  return vertex(c.i, c.j);
}

int LatticeGeometry::head(int e) const {
  auto c = edge_coord(e);
  return c.o == Orient::H ? vertex(c.i + 1, c.j) : vertex(c.i, c.j + 1);
}

int LatticeGeometry::orientation_sign(int e) const {
  return edge_coord(e).o == Orient::V ? 1 : -1;
}

std::vector<std::pair<int, int>> LatticeGeometry::vertex_star(int v) const {
  auto [i, j] = vertex_coord(v);
  return {{edge(Orient::H, i, j), -1},
          {edge(Orient::H, i - 1, j), 1},
          {edge(Orient::V, i, j), -1},
          {edge(Orient::V, i, j - 1), 1}};
}

std::vector<std::pair<int, int>> LatticeGeometry::plaquette_boundary(int p) const {
  auto [i, j] = plaquette_coord(p);
  return {{edge(Orient::H, i, j), 1},
          {edge(Orient::V, i + 1, j), 1},
          {edge(Orient::H, i, j + 1), -1},
          {edge(Orient::V, i, j), -1}};
}

std::array<std::pair<int, int>, 2> LatticeGeometry::edge_cofaces(int e) const {
  auto c = edge_coord(e);
  if (c.o == Orient::H) return {{{plaquette(c.i, c.j), 1}, {plaquette(c.i, c.j - 1), -1}}};
  return {{{plaquette(c.i, c.j), -1}, {plaquette(c.i - 1, c.j), 1}}};
}

int LatticeGeometry::south_east(int p) const {
  auto [i, j] = plaquette_coord(p);
  return vertex(i + 1, j);
}

bool LatticeGeometry::boundary_of_boundary_zero() const {
  for (int p = 0; p < num_plaquettes(); ++p) {
    std::vector<int> acc(num_vertices(), 0);
    for (auto [e, s] : plaquette_boundary(p)) {
      acc[head(e)] += s;
      acc[tail(e)] -= s;
    }
    for (int x : acc)
      if (x != 0) return false;
  }
  return true;
}

// ---- displacement vectors ----

DisplacementVector& DisplacementVector::operator+=(const DisplacementVector& o) {
  if (L != o.L) throw GeometryMismatch("operators on different lattices");
  for (size_t e = 0; e < x_hat.size(); ++e) {
    if (!o.x_hat[e].is_zero()) x_hat[e] += o.x_hat[e];
    if (!o.z[e].is_zero()) z[e] += o.z[e];
  }
  return *this;
}

DisplacementVector& DisplacementVector::operator-=(const DisplacementVector& o) {
  return *this += QuadScalar(-1) * o;
}

DisplacementVector operator*(const QuadScalar& k, DisplacementVector a) {
  for (size_t e = 0; e < a.x_hat.size(); ++e) {
    if (!a.x_hat[e].is_zero()) a.x_hat[e] *= k;
    if (!a.z[e].is_zero()) a.z[e] *= k;
  }
  return a;
}

bool DisplacementVector::is_identity() const {
  for (size_t e = 0; e < x_hat.size(); ++e)
    if (!x_hat[e].is_zero() || !z[e].is_zero()) return false;
  return true;
}

std::vector<int> DisplacementVector::support() const {
  std::vector<int> s;
  for (size_t e = 0; e < x_hat.size(); ++e)
    if (!x_hat[e].is_zero() || !z[e].is_zero()) s.push_back(static_cast<int>(e));
  return s;
}

Vec<QuadScalar> DisplacementVector::flatten() const {
  Vec<QuadScalar> v = x_hat;
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

QuadScalar symplectic_value(const DisplacementVector& u, const DisplacementVector& v) {
  if (u.L != v.L) throw GeometryMismatch("operators on different lattices");
  QuadScalar f;
  for (size_t e = 0; e < u.x_hat.size(); ++e) {
    if (!u.z[e].is_zero() && !v.x_hat[e].is_zero()) f += u.z[e] * v.x_hat[e];
    if (!u.x_hat[e].is_zero() && !v.z[e].is_zero()) f -= u.x_hat[e] * v.z[e];
  }
  return f;
}

PhaseFraction symplectic_phase(const DisplacementVector& u, const DisplacementVector& v) {
  return phase_reduce(symplectic_value(u, v));
}

// ---- parent theory ----

DisplacementVector vertex_term(const LatticeGeometry& g, int v, const QuadScalar& phi_hat) {
  DisplacementVector d(g);
  for (auto [e, s] : g.vertex_star(v)) d.x_hat[e] += QuadScalar(s) * phi_hat;
  return d;
}

DisplacementVector plaquette_term(const LatticeGeometry& g, int p, const QuadScalar& c) {
  DisplacementVector d(g);
  for (auto [e, s] : g.plaquette_boundary(p)) d.z[e] += QuadScalar(s) * c;
  return d;
}

QuadScalar charge_at(const LatticeGeometry& g, const DisplacementVector& op, int v) {
  QuadScalar q;
  for (auto [e, s] : g.vertex_star(v))
    if (!op.z[e].is_zero()) q += QuadScalar(s) * op.z[e];
  return q;
}

QuadScalar flux_at(const LatticeGeometry& g, const DisplacementVector& op, int p) {
  QuadScalar f;
  for (auto [e, s] : g.plaquette_boundary(p))
    if (!op.x_hat[e].is_zero()) f += QuadScalar(s) * op.x_hat[e];
  return f;
}

namespace {
void accumulate(Cochain& c, int e, int s) {
  c[e] += s;
  if (c[e] == 0) c.erase(e);
}
}  // namespace

Cochain direct_path(const LatticeGeometry& g, int i, int j, const std::string& moves) {
  Cochain c;
  for (char m : moves) {
    switch (m) {
      case 'E': accumulate(c, g.edge(Orient::H, i, j), 1); ++i; break;
      case 'W': accumulate(c, g.edge(Orient::H, i - 1, j), -1); --i; break;
      case 'N': accumulate(c, g.edge(Orient::V, i, j), 1); ++j; break;
      case 'S': accumulate(c, g.edge(Orient::V, i, j - 1), -1); --j; break;
      default: throw Error(std::string("bad move '") + m + "'");
    }
  }
  return c;
}

Cochain dual_path(const LatticeGeometry& g, int i, int j, const std::string& moves) {
  Cochain c;
  for (char m : moves) {
    switch (m) {
      case 'E': accumulate(c, g.edge(Orient::V, i + 1, j), -1); ++i; break;
      case 'W': accumulate(c, g.edge(Orient::V, i, j), 1); --i; break;
      case 'N': accumulate(c, g.edge(Orient::H, i, j + 1), 1); ++j; break;
      case 'S': accumulate(c, g.edge(Orient::H, i, j), -1); --j; break;
      default: throw Error(std::string("bad move '") + m + "'");
    }
  }
  return c;
}

DisplacementVector z_string(const LatticeGeometry& g, const Cochain& path, const QuadScalar& c) {
  DisplacementVector d(g);
  for (auto [e, s] : path) d.z[e] += QuadScalar(s) * c;
  return d;
}

DisplacementVector x_string(const LatticeGeometry& g, const Cochain& path,
                            const QuadScalar& phi_hat) {
  DisplacementVector d(g);
  for (auto [e, s] : path) d.x_hat[e] += QuadScalar(s) * phi_hat;
  return d;
}

}  // namespace cvcond
