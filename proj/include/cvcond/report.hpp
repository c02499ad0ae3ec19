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

#include <optional>
#include <string>
#include <vector>

#include "cvcond/anyon.hpp"

namespace cvcond {

enum class Mode { Condense, LatticeVerify, Spectrum, Boundary, Full };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

// flux | flux-charge | composite | double | even-K
struct Taxonomy {
  std::string name;
  long n = 1, m = 1;
  long n1 = 1, n2 = 1, np = 2;
  friend bool operator==(const Taxonomy&, const Taxonomy&) = default;
};

struct RunConfig {
  Mode mode = Mode::Full;
  long discriminant = 0;  // 0 infers it from the generators
  std::optional<Taxonomy> taxonomy;
  std::vector<FluxCharge> generators;
  std::vector<bool> continuous;
  int L = 2;
  double alpha = 0.1;
  double U = 100.0;
  double n_tolerance = 1e-10;
  double commutator_tolerance = 1e-12;
  std::string out;

  // Throws ConfigError.
  void validate() const;
  std::vector<FluxCharge> resolved_generators() const;
  std::string describe() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parses a JSON run configuration. Throws ConfigError.
RunConfig parse_config(const std::string& text);
std::string write_config(const RunConfig& c);

struct AnyonRow {
  std::string name;
  std::string representative;
  long order = 0;
  std::string spin;            // in [0, 1)
  std::string spin_symmetric;  // in (-1/2, 1/2]
  friend bool operator==(const AnyonRow&, const AnyonRow&) = default;
};

struct LogicalRow {
  std::string kind;
  long dimension = 0;
  std::string x, z, pairing;
  friend bool operator==(const LogicalRow&, const LogicalRow&) = default;
};

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

struct LayerRow {
  std::string bosons;
  std::string sqrt_abs_det_z;
  double gap = 0;
  double symmetry_error = 0;
  std::vector<double> mode_energies;
  friend bool operator==(const LayerRow&, const LayerRow&) = default;
};

struct SpectralSection {
  double alpha = 0;
  double n_diagonal = 0;
  double n_offdiagonal_max = 0;
  double lambda_min = 0;
  double delta = 0;
  std::string degeneracy;
  std::vector<LayerRow> layers;
  friend bool operator==(const SpectralSection&, const SpectralSection&) = default;
};

struct CondenseSection {
  std::string subgroup_class;
  std::string basis;
  std::string tag;
  std::string content;
  std::vector<std::string> fusion;  // factor names, e.g. Z2, Z4, U(1), R
  std::vector<AnyonRow> anyons;
  std::vector<std::vector<std::string>> braiding;
  std::optional<long> gsd_torus;
  std::optional<int> central_charge_mod8;
  friend bool operator==(const CondenseSection&, const CondenseSection&) = default;
};

struct LatticeSection {
  int L = 0;
  std::string pattern;
  size_t generators = 0;
  size_t pairs_checked = 0;
  std::vector<std::string> violations;
  std::string logical_summary;
  long logical_dimension = 1;
  std::vector<LogicalRow> logical;
  friend bool operator==(const LatticeSection&, const LatticeSection&) = default;
};

struct Report {
  RunConfig config;
  std::optional<CondenseSection> condense;
  std::optional<std::vector<std::vector<std::string>>> lagrangian_subgroups;
  std::optional<LatticeSection> lattice;
  std::optional<SpectralSection> spectral;
  std::vector<CheckRow> checks;
  std::vector<std::string> warnings;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  friend bool operator==(const Report&, const Report&) = default;
};

Report run(const RunConfig& config);

// Human-readable text; never parsed back.
std::string render(const Report& r);
// Machine report as JSON, and its inverse.
std::string render_machine(const Report& r);
Report parse_report(const std::string& text);

}  // namespace cvcond
