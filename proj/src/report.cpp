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


#include "cvcond/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cvcond/condensation.hpp"
#include "cvcond/errors.hpp"
#include "cvcond/finite_anyon.hpp"
#include "cvcond/lattice.hpp"
#include "cvcond/spectral.hpp"

namespace cvcond {

using json = nlohmann::ordered_json;

// ---- configuration ----

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Condense: return "condense";
    case Mode::LatticeVerify: return "lattice-verify";
    case Mode::Spectrum: return "spectrum";
    case Mode::Boundary: return "boundary";
    case Mode::Full: return "full";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::Condense, Mode::LatticeVerify, Mode::Spectrum, Mode::Boundary, Mode::Full})
    if (to_string(m) == s) return m;
  throw ConfigError("unknown mode '" + s + "'");
}

namespace {

std::string canonical_taxonomy(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "flux") return "flux";
  if (s == "flux-charge" || s == "toric-gkp") return "flux-charge";
  if (s == "composite") return "composite";
  if (s == "double") return "double";
  if (s == "even-k" || s == "evenk") return "even-K";
  throw ConfigError("unknown taxonomy '" + name + "'");
}

bool lattice_mode(Mode m) {
  return m == Mode::LatticeVerify || m == Mode::Spectrum || m == Mode::Full;
}

}  // namespace

void RunConfig::validate() const {
  if (taxonomy.has_value() == !generators.empty())
    throw ConfigError("give exactly one of a taxonomy shortcut or explicit generators");
  if (taxonomy) {
    const std::string t = canonical_taxonomy(taxonomy->name);
    if ((t == "flux-charge" || t == "composite") && taxonomy->n < 1)
      throw ConfigError("n must be positive");
    if (t == "double" && (taxonomy->n < 1 || taxonomy->m < 1))
      throw ConfigError("n and m must be positive");
    if (t == "even-K") {
      if (taxonomy->n1 < 1 || taxonomy->n2 < 1)
        throw ConfigError("n1 and n2 must be positive");
      if (taxonomy->np * taxonomy->np <= taxonomy->n1 * taxonomy->n2)
        throw ConfigError("even-K needs n'^2 > n1 n2");
    }
  }
  if (!continuous.empty() && continuous.size() != generators.size())
    throw ConfigError("continuous flags must match the generators");
  if (lattice_mode(mode) && L < 2) throw ConfigError("L must be at least 2");
  if (!(alpha > 0)) throw ConfigError("alpha must be positive");
  if (!(U > 0)) throw ConfigError("U must be positive");
  if (discriminant < 0) throw ConfigError("discriminant must be non-negative");
  if (discriminant != 0)
    for (const auto& g : resolved_generators())
      for (const auto& x : {g.flux_hat, g.charge})
        if (!x.is_rational() && x.discriminant() != discriminant)
          throw ConfigError("generator " + g.str() + " is not in Q(sqrt(" +
                            std::to_string(discriminant) + "))");
}

std::vector<FluxCharge> RunConfig::resolved_generators() const {
  if (!taxonomy) return generators;
  const std::string t = canonical_taxonomy(taxonomy->name);
  if (t == "flux") return taxonomy_flux();
  if (t == "flux-charge") return taxonomy_flux_charge(taxonomy->n);
  if (t == "composite") return taxonomy_composite(taxonomy->n);
  if (t == "double") return taxonomy_double(taxonomy->n, taxonomy->m);
  return taxonomy_even_k(taxonomy->n1, taxonomy->n2, taxonomy->np);
}

std::string RunConfig::describe() const {
  if (!taxonomy) {
    std::string s;
    for (const auto& g : generators) s += (s.empty() ? "" : ", ") + g.str();
    return "<" + s + ">";
  }
  const std::string t = canonical_taxonomy(taxonomy->name);
  if (t == "flux-charge" || t == "composite") return t + "(" + std::to_string(taxonomy->n) + ")";
  if (t == "double")
    return "double(" + std::to_string(taxonomy->n) + "," + std::to_string(taxonomy->m) + ")";
  if (t == "even-K")
    return "even-K(" + std::to_string(taxonomy->n1) + "," + std::to_string(taxonomy->n2) + "," +
           std::to_string(taxonomy->np) + ")";
  return t;
}

namespace {

json config_to_json(const RunConfig& c) {
  json j;
  j["mode"] = to_string(c.mode);
  j["discriminant"] = c.discriminant;
  if (c.taxonomy) {
    json t;
    t["name"] = c.taxonomy->name;
    t["n"] = c.taxonomy->n;
    t["m"] = c.taxonomy->m;
    t["n1"] = c.taxonomy->n1;
    t["n2"] = c.taxonomy->n2;
    t["np"] = c.taxonomy->np;
    j["taxonomy"] = t;
  }
  if (!c.generators.empty()) {
    json g = json::array();
    for (const auto& x : c.generators) g.push_back({x.flux_hat.str(), x.charge.str()});
    j["generators"] = g;
    j["continuous"] = c.continuous;
  }
  j["L"] = c.L;
  j["alpha"] = c.alpha;
  j["U"] = c.U;
  j["tolerances"] = {{"n_matrix", c.n_tolerance}, {"commutator", c.commutator_tolerance}};
  j["out"] = c.out;
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  static const std::vector<std::string> known = {"mode", "discriminant", "taxonomy", "generators",
                                                 "continuous", "L", "alpha", "U",
                                                 "tolerances", "out"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw ConfigError("unknown key '" + k + "'");
  RunConfig c;
  try {
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    c.discriminant = j.value("discriminant", 0L);
    if (j.contains("taxonomy")) {
      const json& t = j.at("taxonomy");
      Taxonomy tx;
      if (t.is_string()) {
        tx.name = t.get<std::string>();
      } else {
        tx.name = t.at("name").get<std::string>();
        tx.n = t.value("n", 1L);
        tx.m = t.value("m", 1L);
        tx.n1 = t.value("n1", 1L);
        tx.n2 = t.value("n2", 1L);
        tx.np = t.value("np", 2L);
      }
      canonical_taxonomy(tx.name);
      c.taxonomy = tx;
    }
    if (j.contains("generators"))
      for (const auto& g : j.at("generators")) {
        if (!g.is_array() || g.size() != 2) throw ConfigError("a generator is a [flux, charge] pair");
        auto scalar = [](const json& x) {
          return x.is_string() ? QuadScalar::parse(x.get<std::string>())
                               : QuadScalar(x.get<long>());
        };
        c.generators.emplace_back(scalar(g[0]), scalar(g[1]));
      }
    if (j.contains("continuous")) c.continuous = j.at("continuous").get<std::vector<bool>>();
    c.L = j.value("L", 2);
    c.alpha = j.value("alpha", 0.1);
    c.U = j.value("U", 100.0);
    if (j.contains("tolerances")) {
      c.n_tolerance = j.at("tolerances").value("n_matrix", 1e-10);
      c.commutator_tolerance = j.at("tolerances").value("commutator", 1e-12);
    }
    c.out = j.value("out", std::string());
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  return c;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  RunConfig c = config_from_json(j);
  c.validate();
  return c;
}

std::string write_config(const RunConfig& c) { return config_to_json(c).dump(2); }

// ---- pipeline ----

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRow& c) { return c.pass; });
}

namespace {

std::string subscript(long k) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s = k < 0 ? "₋" : "";
  for (char ch : std::to_string(k < 0 ? -k : k)) s += digits[ch - '0'];
  return s;
}

std::vector<std::string> fusion_names(const CondensationOutcome& o) {
  std::vector<std::string> out;
  for (long k : o.finite_theory.cyclic_orders)
    if (k > 1) out.push_back("Z" + std::to_string(k));
  if (o.continuous_factor) out.push_back(o.continuous_factor->compact ? "U(1)" : "R");
  for (size_t i = 0; i < o.free_generators.size(); ++i) out.push_back("Z");
  return out;
}

CondenseSection condense_section(const CondensationOutcome& o) {
  CondenseSection s;
  s.subgroup_class = to_string(o.B.subgroup_class);
  s.basis = to_string(o.B.basis);
  s.tag = o.classification_tag;
  s.content = o.encoded_content;
  s.fusion = fusion_names(o);
  const auto& t = o.finite_theory;
  for (size_t i = 0; i < t.cyclic_orders.size(); ++i) {
    AnyonRow a;
    if (o.kind == CaseKind::Double && t.cyclic_orders.size() == o.B.rank()) {
      // Layer level 2 s(g) of the generator condensed against this anyon.
      long level = 2 * spin_value(o.B.generators[i]).rational_part().get_num().get_si();
      a.name = "a" + subscript(level) + "-analogue";
    } else {
      a.name = "x" + std::to_string(i + 1);
    }
    if (i < o.finite_generators.size()) a.representative = o.finite_generators[i].str();
    a.order = t.cyclic_orders[i];
    a.spin = t.generator_spins[i].str();
    a.spin_symmetric = t.generator_spins[i].symmetric().str();
    s.anyons.push_back(std::move(a));
  }
  for (const auto& row : t.braiding_matrix) {
    std::vector<std::string> r;
    for (const auto& b : row) r.push_back(b.str());
    s.braiding.push_back(std::move(r));
  }
  if (o.is_finite()) {
    s.gsd_torus = t.order();
    CentralCharge cc = gauss_sum_central_charge(t);
    if (!cc.degenerate) s.central_charge_mod8 = cc.c_minus_mod8;
  }
  return s;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void add_check(Report& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

template <class F>
void guarded(Report& r, const std::string& stage, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    add_check(r, stage, false, e.what());
  }
}

void run_lattice(Report& r, const RunConfig& c, const CondensationOutcome& o) {
  const BosonSubgroup& B = o.B;
  LatticeSection sec;
  sec.L = c.L;
  LatticeGeometry g(c.L);
  HoppingPattern pattern = synthesize_hopping(B, g);
  sec.pattern = pattern.dump();
  PatternCheck pc = check_pattern(pattern, B);
  std::string failures;
  for (const auto& f : pc.failures) failures += (failures.empty() ? "" : "; ") + f;
  add_check(r, "hopping synthesis", pc.ok(), failures);

  if (pattern.basis == HoppingBasis::Composite) {
    bool ok = true;
    std::string detail;
    for (const auto& x : o.finite_generators) {
      PhaseFraction tj = t_junction_spin(pattern, x);
      if (!(tj == spin(x))) {
        ok = false;
        detail += x.str() + ": " + tj.str() + " vs " + spin(x).str() + "; ";
      }
    }
    add_check(r, "t-junction spin", ok, detail);
  }

  StabilizerModel S = build_code(B, c.L, pattern);
  CommutationReport cr = verify_commuting(S.generators);
  sec.generators = S.generators.size();
  sec.pairs_checked = cr.pairs_checked;
  sec.violations = cr.violation_labels;
  add_check(r, "stabilizers commute", cr.pass,
            std::to_string(cr.violations.size()) + " violating pairs of " +
                std::to_string(cr.pairs_checked));

  LogicalContent lc = logical_operators(S, standard_homology(g));
  sec.logical_summary = lc.summary();
  sec.logical_dimension = lc.finite_dimension;
  for (const auto& f : lc.factors)
    sec.logical.push_back({to_string(f.kind), f.dimension, f.x_name, f.z_name, f.pairing.str()});
  if (o.is_finite()) {
    bool only_qudits = std::all_of(lc.factors.begin(), lc.factors.end(), [](const LogicalFactor& f) {
      return f.kind == FactorKind::Qudit;
    });
    long gsd = o.finite_theory.order();
    add_check(r, "logical dimension", only_qudits && lc.finite_dimension == gsd,
              "lattice " + std::to_string(lc.finite_dimension) + ", anyons " + std::to_string(gsd));
  }
  r.lattice = std::move(sec);
}

void run_spectrum(Report& r, const RunConfig& c, const CondensationOutcome& o) {
  const BosonSubgroup& B = o.B;
  if (!o.is_finite()) {
    add_check(r, "spectral analysis", false, "needs a finite condensed theory");
    return;
  }
  SpectralSection sec;
  sec.alpha = c.alpha;
  LatticeGeometry g(c.L);
  HoppingPattern pattern = synthesize_hopping(B, g);
  auto layers = quadrature_vectors(pattern, B, c.L);

  std::vector<QuadratureForm> cs, ws;
  double comm_dev = 0;
  bool det_ok = true;
  bool gaps_ok = true;
  for (const auto& layer : layers) {
    cs.insert(cs.end(), layer.c.begin(), layer.c.end());
    ws.insert(ws.end(), layer.w.begin(), layer.w.end());
    for (size_t i = 0; i < layer.c.size(); ++i)
      for (size_t j = 0; j < layer.w.size(); ++j) {
        double exact = -2.0 * std::numbers::pi *
                       symplectic_value(layer.c_exact[i], layer.w_exact[j]).to_double();
        comm_dev = std::max(comm_dev, std::abs(commutator(layer.c[i], layer.w[j]) - exact));
      }
    ZMatrix Z = z_matrix(layer.c_exact);
    double exact_det = Z.det.get_d();
    if (std::abs(Z.det_float - exact_det) > 1e-9 * std::max(1.0, std::abs(exact_det))) det_ok = false;
    Spectrum sp = quadratic_spectrum(layer.w, c.alpha);
    if (!(sp.gap > 0) || sp.symmetry_error > c.n_tolerance) gaps_ok = false;
    LayerRow row;
    for (const auto& b : layer.bosons) row.bosons += (row.bosons.empty() ? "" : ", ") + b.str();
    row.sqrt_abs_det_z = Z.sqrt_abs_det.get_str();
    row.gap = sp.gap;
    row.symmetry_error = sp.symmetry_error;
    row.mode_energies = sp.mode_energies;
    sec.layers.push_back(std::move(row));
  }
  add_check(r, "commutator cross-check", comm_dev < c.commutator_tolerance,
            "max deviation " + sci(comm_dev));
  add_check(r, "det Z exact vs LU", det_ok);
  add_check(r, "quadratic spectrum gapped and symmetric", gaps_ok);

  Eigen::MatrixXd N = n_matrix(cs, ws, c.alpha);
  sec.n_diagonal = N(0, 0);
  double dev = 0;
  for (Eigen::Index i = 0; i < N.rows(); ++i)
    for (Eigen::Index j = 0; j < N.cols(); ++j) {
      if (i == j)
        dev = std::max(dev, std::abs(N(i, j) - sec.n_diagonal));
      else
        sec.n_offdiagonal_max = std::max(sec.n_offdiagonal_max, std::abs(N(i, j)));
    }
  add_check(r, "N proportional to identity", std::max(dev, sec.n_offdiagonal_max) < c.n_tolerance);
  if (std::abs(sec.n_diagonal - c.alpha / std::numbers::pi) > c.n_tolerance)
    r.warnings.push_back("N evaluates to " + num(sec.n_diagonal / c.alpha) +
                         " alpha times the identity; the quoted alpha/pi normalization is not reproduced");
  GapEstimate ge = gap_estimate(N, c.U);
  sec.lambda_min = ge.lambda_min;
  sec.delta = ge.delta;

  Integer deg = effective_hamiltonian_degeneracy(B, c.L);
  sec.degeneracy = deg.get_str();
  add_check(r, "degeneracy matches anyon count", deg == o.finite_theory.order(),
            deg.get_str() + " vs " + std::to_string(o.finite_theory.order()));

  SpectralConfig sc;
  sc.L = c.L;
  sc.alpha = c.alpha;
  sc.U = c.U;
  for (const auto& a : sc.advisories()) r.warnings.push_back(a);
  r.spectral = std::move(sec);
}

void run_boundary(Report& r, const CondensationOutcome& o) {
  if (!o.is_finite()) {
    r.warnings.push_back("gapped-boundary search skipped: the condensed theory is not finite");
    return;
  }
  std::vector<std::vector<std::string>> subs;
  for (const auto& s : lagrangian_subgroups(o.finite_theory)) {
    std::vector<std::string> gens;
    for (const auto& gl : s.generators) {
      std::string t = "[";
      for (size_t i = 0; i < gl.size(); ++i) t += (i ? "," : "") + std::to_string(gl[i]);
      gens.push_back(t + "]");
    }
    subs.push_back(std::move(gens));
  }
  r.lagrangian_subgroups = std::move(subs);
}

}  // namespace

Report run(const RunConfig& config) {
  config.validate();
  Report r;
  r.config = config;
  std::optional<CondensationOutcome> o;
  guarded(r, "condensation", [&] {
    o = condense(config.resolved_generators(), config.continuous);
    r.condense = condense_section(*o);
    for (const auto& w : o->warnings) r.warnings.push_back(w);
    if (o->is_finite())
      add_check(r, "condensed theory well defined", o->finite_theory.well_defined());
  });
  if (!o) return r;
  const Mode m = config.mode;
  if (m == Mode::Boundary || m == Mode::Full)
    guarded(r, "gapped-boundary search", [&] { run_boundary(r, *o); });
  if (m == Mode::LatticeVerify || m == Mode::Full)
    guarded(r, "lattice", [&] { run_lattice(r, config, *o); });
  if (m == Mode::Spectrum || m == Mode::Full)
    guarded(r, "spectral", [&] { run_spectrum(r, config, *o); });
  return r;
}

// ---- rendering ----

namespace {

std::string pretty_minus(std::string s) {
  std::string out;
  for (char ch : s) out += ch == '-' ? std::string("−") : std::string(1, ch);
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

std::string render(const Report& r) {
  std::ostringstream os;
  os << "run: " << to_string(r.config.mode) << " " << r.config.describe();
  if (lattice_mode(r.config.mode)) os << " L=" << r.config.L;
  os << "\n";
  if (r.condense) {
    const auto& c = *r.condense;
    os << "\n[condensation]\n";
    os << "subgroup: " << c.subgroup_class << " (" << c.basis << " hopping)\n";
    os << "class: " << c.tag << "\n";
    os << "content: " << c.content << "\n";
    os << "fusion: " << (c.fusion.empty() ? "trivial" : join(c.fusion, " x ")) << "\n";
    for (const auto& a : c.anyons) {
      os << a.name << ": order " << a.order << ", spin " << pretty_minus(a.spin);
      if (a.spin_symmetric != a.spin) os << " ≡ " << pretty_minus(a.spin_symmetric);
      os << "\n";
    }
    if (!c.braiding.empty()) {
      os << "braiding:\n";
      for (const auto& row : c.braiding) os << "  " << pretty_minus(join(row, "  ")) << "\n";
    }
    if (c.gsd_torus) os << "gsd_torus: " << *c.gsd_torus << "\n";
    if (c.central_charge_mod8) os << "c- mod 8: " << *c.central_charge_mod8 << "\n";
  }
  if (r.lagrangian_subgroups) {
    os << "\n[boundary]\n";
    if (r.lagrangian_subgroups->empty()) os << "lagrangian subgroups: none\n";
    for (const auto& s : *r.lagrangian_subgroups) os << "lagrangian subgroup: <" << join(s, ", ") << ">\n";
  }
  if (r.lattice) {
    const auto& l = *r.lattice;
    os << "\n[lattice L=" << l.L << "]\n" << l.pattern;
    os << "generators: " << l.generators << ", pairs checked: " << l.pairs_checked << "\n";
    for (const auto& v : l.violations) os << "violation: " << v << "\n";
    os << "logical: " << l.logical_summary << " (finite dimension " << l.logical_dimension << ")\n";
    for (const auto& f : l.logical) {
      os << "  " << f.kind;
      if (f.kind == "qudit") os << "(" << f.dimension << ")";
      os << ": " << f.x << " | " << f.z << " | pairing " << pretty_minus(f.pairing) << "\n";
    }
  }
  if (r.spectral) {
    const auto& s = *r.spectral;
    os << "\n[spectrum alpha=" << s.alpha << "]\n";
    os << "N diagonal: " << s.n_diagonal << ", off-diagonal max: " << s.n_offdiagonal_max << "\n";
    os << "lambda_min: " << s.lambda_min << ", gap estimate: " << s.delta << "\n";
    os << "degeneracy: " << s.degeneracy << "\n";
    for (const auto& l : s.layers)
      os << "layer " << l.bosons << ": sqrt|det Z| = " << l.sqrt_abs_det_z << ", gap " << l.gap
         << "\n";
  }
  os << "\n[checks]\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  if (!r.warnings.empty()) {
    os << "\n[warnings]\n";
    for (const auto& w : r.warnings) os << "- " << w << "\n";
  }
  return os.str();
}

namespace {

json to_json(const Report& r) {
  json j;
  j["config"] = config_to_json(r.config);
  if (r.condense) {
    const auto& c = *r.condense;
    json s;
    s["subgroup_class"] = c.subgroup_class;
    s["basis"] = c.basis;
    s["tag"] = c.tag;
    s["content"] = c.content;
    s["fusion_group"] = c.fusion;
    json an = json::array();
    for (const auto& a : c.anyons)
      an.push_back({{"name", a.name}, {"representative", a.representative}, {"order", a.order},
                    {"spin", a.spin}, {"spin_symmetric", a.spin_symmetric}});
    s["anyons"] = an;
    s["braiding"] = c.braiding;
    s["gsd_torus"] = c.gsd_torus ? json(*c.gsd_torus) : json(nullptr);
    s["central_charge_mod8"] = c.central_charge_mod8 ? json(*c.central_charge_mod8) : json(nullptr);
    j["condense"] = s;
  }
  if (r.lagrangian_subgroups) j["lagrangian_subgroups"] = *r.lagrangian_subgroups;
  if (r.lattice) {
    const auto& l = *r.lattice;
    json s;
    s["L"] = l.L;
    s["pattern"] = l.pattern;
    s["generators"] = l.generators;
    s["pairs_checked"] = l.pairs_checked;
    s["violations"] = l.violations;
    s["logical_summary"] = l.logical_summary;
    s["logical_dimension"] = l.logical_dimension;
    json fs = json::array();
    for (const auto& f : l.logical)
      fs.push_back({{"kind", f.kind}, {"dimension", f.dimension}, {"x", f.x}, {"z", f.z},
                    {"pairing", f.pairing}});
    s["logical"] = fs;
    j["lattice"] = s;
  }
  if (r.spectral) {
    const auto& sp = *r.spectral;
    json s;
    s["alpha"] = sp.alpha;
    s["n_diagonal"] = sp.n_diagonal;
    s["n_offdiagonal_max"] = sp.n_offdiagonal_max;
    s["lambda_min"] = sp.lambda_min;
    s["delta"] = sp.delta;
    s["degeneracy"] = sp.degeneracy;
    json ls = json::array();
    for (const auto& l : sp.layers)
      ls.push_back({{"bosons", l.bosons}, {"sqrt_abs_det_z", l.sqrt_abs_det_z}, {"gap", l.gap},
                    {"symmetry_error", l.symmetry_error}, {"mode_energies", l.mode_energies}});
    s["layers"] = ls;
    j["spectral"] = s;
  }
  json cs = json::array();
  for (const auto& c : r.checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  j["warnings"] = r.warnings;
  j["passed"] = r.passed();
  return j;
}

Report from_json(const json& j) {
  Report r;
  r.config = config_from_json(j.at("config"));
  if (j.contains("condense")) {
    const json& s = j.at("condense");
    CondenseSection c;
    c.subgroup_class = s.at("subgroup_class");
    c.basis = s.at("basis");
    c.tag = s.at("tag");
    c.content = s.at("content");
    c.fusion = s.at("fusion_group").get<std::vector<std::string>>();
    for (const auto& a : s.at("anyons"))
      c.anyons.push_back({a.at("name"), a.at("representative"), a.at("order").get<long>(),
                          a.at("spin"), a.at("spin_symmetric")});
    c.braiding = s.at("braiding").get<std::vector<std::vector<std::string>>>();
    if (!s.at("gsd_torus").is_null()) c.gsd_torus = s.at("gsd_torus").get<long>();
    if (!s.at("central_charge_mod8").is_null())
      c.central_charge_mod8 = s.at("central_charge_mod8").get<int>();
    r.condense = std::move(c);
  }
  if (j.contains("lagrangian_subgroups"))
    r.lagrangian_subgroups = j.at("lagrangian_subgroups").get<std::vector<std::vector<std::string>>>();
  if (j.contains("lattice")) {
    const json& s = j.at("lattice");
    LatticeSection l;
    l.L = s.at("L");
    l.pattern = s.at("pattern");
    l.generators = s.at("generators");
    l.pairs_checked = s.at("pairs_checked");
    l.violations = s.at("violations").get<std::vector<std::string>>();
    l.logical_summary = s.at("logical_summary");
    l.logical_dimension = s.at("logical_dimension");
    for (const auto& f : s.at("logical"))
      l.logical.push_back({f.at("kind"), f.at("dimension").get<long>(), f.at("x"), f.at("z"),
                           f.at("pairing")});
    r.lattice = std::move(l);
  }
  if (j.contains("spectral")) {
    const json& s = j.at("spectral");
    SpectralSection sp;
    sp.alpha = s.at("alpha");
    sp.n_diagonal = s.at("n_diagonal");
    sp.n_offdiagonal_max = s.at("n_offdiagonal_max");
    sp.lambda_min = s.at("lambda_min");
    sp.delta = s.at("delta");
    sp.degeneracy = s.at("degeneracy");
    for (const auto& l : s.at("layers"))
      sp.layers.push_back({l.at("bosons"), l.at("sqrt_abs_det_z"), l.at("gap"),
                           l.at("symmetry_error"), l.at("mode_energies").get<std::vector<double>>()});
    r.spectral = std::move(sp);
  }
  for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name"), c.at("pass"), c.at("detail")});
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string render_machine(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cvcond
