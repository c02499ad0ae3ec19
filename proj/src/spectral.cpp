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


#include "cvcond/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvcond/errors.hpp"

namespace cvcond {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Integer to_integer(const QuadScalar& x) {
  if (!x.is_integer()) throw NonIntegerEntry("pairing " + x.str() + " is not an integer");
  return x.rational_part().get_num();
}

}  // namespace

QuadratureForm QuadratureForm::from_displacement(const DisplacementVector& u) {
  QuadratureForm q;
  q.x.resize(u.z.size());
  q.p.resize(u.x_hat.size());
  for (size_t e = 0; e < u.z.size(); ++e) {
    q.x[e] = u.z[e].to_double();
    q.p[e] = -kTwoPi * u.x_hat[e].to_double();
  }
  return q;
}

double commutator(const QuadratureForm& u, const QuadratureForm& v) {
  double s = 0;
  for (size_t e = 0; e < u.x.size(); ++e) s += u.x[e] * v.p[e] - u.p[e] * v.x[e];
  return s;
}

double pairing(const QuadratureForm& u, const QuadratureForm& v) {
  return -commutator(u, v) / kTwoPi;
}

std::vector<std::string> SpectralConfig::advisories() const {
  std::vector<std::string> out;
  if (!(U > 10 * alpha)) out.push_back("U is not much larger than alpha");
  if (!(U_prime < 0.1 * std::sqrt(U * alpha)))
    out.push_back("U' is not much smaller than sqrt(U alpha)");
  return out;
}

Layer layer_forms(const HoppingPattern& pattern, const std::vector<FluxCharge>& bosons, int L) {
  LatticeGeometry g(L);
  Layer layer;
  layer.bosons = bosons;
  for (const auto& b : bosons)
    for (int e = 0; e < g.num_edges(); ++e) layer.c_exact.push_back(hop(g, pattern, e, b));
  const size_t n = layer.c_exact.size();
  Mat<QuadScalar> G(n, Vec<QuadScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      G[i][j] = symplectic_value(layer.c_exact[i], layer.c_exact[j]);
      G[j][i] = -G[i][j];
    }
  if (rank(G, n) < n) throw NondegenerateCheckFailed("condensation quadratures pair degenerately");
  // w_j = sum_k x_k c_k with G x = e_j gives f(c_i, w_j) = delta_ij.
  for (size_t j = 0; j < n; ++j) {
    Vec<QuadScalar> ej(n);
    ej[j] = 1;
    auto x = solve(G, n, ej);
    DisplacementVector w(g);
    for (size_t k = 0; k < n; ++k)
      if (!(*x)[k].is_zero()) w += (*x)[k] * layer.c_exact[k];
    layer.w_exact.push_back(std::move(w));
  }
  for (const auto& c : layer.c_exact) layer.c.push_back(QuadratureForm::from_displacement(c));
  for (const auto& w : layer.w_exact) layer.w.push_back(QuadratureForm::from_displacement(w));
  return layer;
}

std::vector<Layer> quadrature_vectors(const HoppingPattern& pattern, const BosonSubgroup& B,
                                      int L) {
  std::vector<Layer> out;
  try {
    for (const auto& b : B.generators) out.push_back(layer_forms(pattern, {b}, L));
  } catch (const NondegenerateCheckFailed&) {
    out = {layer_forms(pattern, B.generators, L)};
  }
  return out;
}

Eigen::MatrixXd n_matrix(const std::vector<QuadratureForm>& c_forms,
                         const std::vector<QuadratureForm>& w_forms, double alpha) {
  // [S_j, w^2] = 2 w [S_j, w], so the double commutator is
  // 2 alpha sum_e [S_i, w_e] [S_j, w_e].
  const auto n = static_cast<Eigen::Index>(c_forms.size());
  Eigen::MatrixXd C(n, static_cast<Eigen::Index>(w_forms.size()));
  for (Eigen::Index i = 0; i < n; ++i)
    for (size_t e = 0; e < w_forms.size(); ++e)
      C(i, static_cast<Eigen::Index>(e)) = commutator(c_forms[i], w_forms[e]);
  // [S_i, [S_j, H0]] = 2 alpha sum_e (i C_ie)(i C_je) = -2 alpha (C C^T)_ij
  Eigen::MatrixXd nested = -2.0 * alpha * C * C.transpose();
  return -nested / (kTwoPi * kTwoPi);
}

ZMatrix z_matrix(const std::vector<DisplacementVector>& c_forms) {
  const size_t n = c_forms.size();
  ZMatrix out;
  out.Z.assign(n, std::vector<Integer>(n, 0));
  // (1 / 2 pi i) [s_u, s_v] = -f(u, v)
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      out.Z[i][j] = -to_integer(symplectic_value(c_forms[i], c_forms[j]));
      out.Z[j][i] = -out.Z[i][j];
    }
  out.det = det_bareiss(out.Z);
  Integer a = abs(out.det), r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (r * r != a) throw Error("determinant of an antisymmetric matrix is not a square");
  out.sqrt_abs_det = r;

  Eigen::MatrixXd Zf(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      Zf(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = out.Z[i][j].get_d();
  out.det_float = n == 0 ? 1.0 : Zf.partialPivLu().determinant();
  return out;
}

GapEstimate gap_estimate(const Eigen::MatrixXd& N, double U) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(N);
  GapEstimate g;
  g.lambda_min = es.eigenvalues().minCoeff();
  if (!(g.lambda_min > 1e-12))
    throw NotPositiveDefinite("smallest eigenvalue " + std::to_string(g.lambda_min));
  g.delta = std::sqrt(U * g.lambda_min);
  return g;
}

Spectrum quadratic_spectrum(const std::vector<QuadratureForm>& w_forms, double alpha) {
  const auto n = static_cast<Eigen::Index>(w_forms.size());
  // i K_ee' = [w_e, w_e'], K real antisymmetric.
  Eigen::MatrixXcd H(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      double K = commutator(w_forms[a], w_forms[b]);
      H(a, b) = std::complex<double>(0.0, 2.0 * alpha * K);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  Spectrum s;
  for (Eigen::Index i = 0; i < n; ++i) s.eigenvalues.push_back(es.eigenvalues()(i));
  const double tol = 1e-9 * std::max(1.0, std::abs(alpha));
  for (double e : s.eigenvalues)
    if (e > tol) s.mode_energies.push_back(e);
  s.gap = s.mode_energies.empty() ? 0.0 : *std::min_element(s.mode_energies.begin(), s.mode_energies.end());
  s.unique_ground_state =
      std::none_of(s.eigenvalues.begin(), s.eigenvalues.end(), [&](double e) { return std::abs(e) <= tol; });
  for (size_t i = 0; i < s.eigenvalues.size(); ++i)
    s.symmetry_error = std::max(s.symmetry_error,
                                std::abs(s.eigenvalues[i] + s.eigenvalues[s.eigenvalues.size() - 1 - i]));
  return s;
}

Integer effective_hamiltonian_degeneracy(const BosonSubgroup& B, int L) {
  CondensationOutcome o = quotient(deconfined_set(B), B);
  if (!o.is_finite()) throw Unclassified("degeneracy counting needs a finite condensed theory");
  LatticeGeometry g(L);
  HoppingPattern p = synthesize_hopping(B, g);
  std::vector<DisplacementVector> cs;
  for (const auto& b : B.generators)
    for (int e = 0; e < g.num_edges(); ++e) cs.push_back(hop(g, p, e, b));
  Integer root = z_matrix(cs).sqrt_abs_det;
  Integer A = o.finite_theory.order(), denom = 1;
  for (int k = 0; k + 1 < L * L; ++k) denom *= A;
  if (denom == 0 || root % denom != 0)
    throw Error("degeneracy count " + root.get_str() + " is not divisible by |A|^(L^2-1)");
  return root / denom;
}

}  // namespace cvcond
