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

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "cvcond/condensation.hpp"
#include "cvcond/lattice.hpp"

namespace cvcond {

/// Real linear combination of quadratures, sum_e x[e] * x_e + p[e] * p_e.
/// The displacement D(u) is generated by s_u = sum_e (z_e x_e - 2 pi xh_e p_e),
/// so that [s_u, s_v] = -2 pi i f(u, v).
struct QuadratureForm {
  std::vector<double> x, p;

  static QuadratureForm from_displacement(const DisplacementVector& u);
};

// Imaginary part of [u, v]; the commutator itself is i times this.
double commutator(const QuadratureForm& u, const QuadratureForm& v);
// Symplectic pairing in units of 2 pi: -commutator / (2 pi).
double pairing(const QuadratureForm& u, const QuadratureForm& v);

struct SpectralConfig {
  int L = 2;
  double alpha = 0.1;
  double U = 100.0;
  double U_prime = 0.0;
  long k = -4;       // layer label
  double J = 1.0;    // condensation coupling, recorded only
  std::vector<std::string> advisories() const;
};

/// Condensation quadratures and their conjugates.
/// c forms are the hops of the layer's bosons on every edge; w forms are the
/// dual basis inside the span of the c forms, pairing(c_i, w_j) = delta_ij.
struct Layer {
  std::vector<FluxCharge> bosons;
  std::vector<DisplacementVector> c_exact, w_exact;
  std::vector<QuadratureForm> c, w;
};

// One layer per generator when each generator's hops pair nondegenerately,
// otherwise a single layer holding every generator.
std::vector<Layer> quadrature_vectors(const HoppingPattern& pattern, const BosonSubgroup& B, int L);
// Throws NondegenerateCheckFailed when the c forms pair degenerately.
Layer layer_forms(const HoppingPattern& pattern, const std::vector<FluxCharge>& bosons, int L);

// N_ij = -(1 / 4 pi^2) [S_i, [S_j, H0]] with H0 = alpha * sum w^2.
Eigen::MatrixXd n_matrix(const std::vector<QuadratureForm>& c_forms,
                         const std::vector<QuadratureForm>& w_forms, double alpha);

struct ZMatrix {
  Mat<Integer> Z;  // Z_ij = (1 / 2 pi i) [S_i, S_j]
  Integer det;
  Integer sqrt_abs_det;
  double det_float = 0;  // from a floating point LU, for cross-checking
};
ZMatrix z_matrix(const std::vector<DisplacementVector>& c_forms);

struct GapEstimate {
  double lambda_min = 0;
  double delta = 0;
};
GapEstimate gap_estimate(const Eigen::MatrixXd& N, double U);

struct Spectrum {
  std::vector<double> eigenvalues;   // ascending, all of them
  std::vector<double> mode_energies; // positive ones
  double gap = 0;
  bool unique_ground_state = false;
  double symmetry_error = 0;  // max |E_i + E_{n-1-i}|
};
Spectrum quadratic_spectrum(const std::vector<QuadratureForm>& w_forms, double alpha);

// sqrt|det Z| over all condensation quadratures divided by |A|^(L^2 - 1),
// one factor of |A| for each independent vertex constraint.
Integer effective_hamiltonian_degeneracy(const BosonSubgroup& B, int L);

}  // namespace cvcond
