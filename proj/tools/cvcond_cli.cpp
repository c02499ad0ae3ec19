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


// Command line front end: condense, lattice-verify, spectrum, boundary, full.
// Exit status is 0 when every check passes, 1 on a failed check and 2 on a
// usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cvcond/errors.hpp"
#include "cvcond/report.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string taxonomy;
  long n = 1, m = 1, n1 = 1, n2 = 1, np = 2;
  std::vector<std::string> generators;
  std::vector<std::string> continuous;
  long discriminant = 0;
  int L = 2;
  double alpha = 0.1;
  double U = 100.0;
  std::string out;
  bool json = false;
};

void add_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON run configuration");
  cmd->add_option("--taxonomy", o.taxonomy, "flux | flux-charge | composite | double | even-K");
  cmd->add_option("--n", o.n, "n for flux-charge, composite and double");
  cmd->add_option("--m", o.m, "m for double");
  cmd->add_option("--n1", o.n1, "n1 for even-K");
  cmd->add_option("--n2", o.n2, "n2 for even-K");
  cmd->add_option("--np", o.np, "n' for even-K");
  cmd->add_option("--generator,-g", o.generators, "boson generator \"flux,charge\" (repeatable)");
  cmd->add_option("--continuous", o.continuous, "per-generator flag, true or false (repeatable)");
  cmd->add_option("--discriminant,-d", o.discriminant, "field discriminant, 0 to infer");
  cmd->add_option("--L", o.L, "torus size");
  cmd->add_option("--alpha", o.alpha, "perturbation strength");
  cmd->add_option("--U", o.U, "stabilizer coupling");
  cmd->add_option("--out", o.out, "write the machine report here");
  cmd->add_flag("--json", o.json, "print the machine report instead of the table");
}

cvcond::RunConfig make_config(const Options& o, cvcond::Mode mode, const CLI::App& cmd) {
  using namespace cvcond;
  RunConfig c;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("cannot read " + o.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    c = parse_config(ss.str());
  }
  c.mode = mode;
  // Inline flags override the file.
  if (!o.taxonomy.empty()) {
    c.taxonomy = Taxonomy{o.taxonomy, o.n, o.m, o.n1, o.n2, o.np};
    c.generators.clear();
  }
  if (!o.generators.empty()) {
    c.generators.clear();
    c.taxonomy.reset();
    for (const auto& g : o.generators) {
      auto comma = g.find(',');
      if (comma == std::string::npos) throw ConfigError("generator '" + g + "' needs flux,charge");
      try {
        c.generators.emplace_back(QuadScalar::parse(g.substr(0, comma)),
                                  QuadScalar::parse(g.substr(comma + 1)));
      } catch (const ParseError& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (!o.continuous.empty()) {
    c.continuous.clear();
    for (const auto& s : o.continuous) {
      if (s != "true" && s != "false") throw ConfigError("continuous flag must be true or false");
      c.continuous.push_back(s == "true");
    }
  }
  if (cmd.count("--discriminant")) c.discriminant = o.discriminant;
  if (cmd.count("--L")) c.L = o.L;
  if (cmd.count("--alpha")) c.alpha = o.alpha;
  if (cmd.count("--U")) c.U = o.U;
  if (!o.out.empty()) c.out = o.out;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-variable boson condensation toolkit"};
  app.require_subcommand(1);
  Options opts;
  const std::vector<std::pair<std::string, cvcond::Mode>> modes = {
      {"condense", cvcond::Mode::Condense},
      {"lattice-verify", cvcond::Mode::LatticeVerify},
      {"spectrum", cvcond::Mode::Spectrum},
      {"boundary", cvcond::Mode::Boundary},
      {"full", cvcond::Mode::Full}};
  std::vector<CLI::App*> cmds;
  for (const auto& [name, mode] : modes) {
    CLI::App* cmd = app.add_subcommand(name, "run the " + name + " pipeline");
    add_options(cmd, opts);
    cmds.push_back(cmd);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (size_t i = 0; i < cmds.size(); ++i) {
      if (!cmds[i]->parsed()) continue;
      cvcond::RunConfig config = make_config(opts, modes[i].second, *cmds[i]);
      cvcond::Report report = cvcond::run(config);
      const std::string machine = cvcond::render_machine(report);
      if (!config.out.empty()) {
        std::ofstream out(config.out);
        if (!out) throw cvcond::ConfigError("cannot write " + config.out);
        out << machine;
      }
      std::cout << (opts.json ? machine : cvcond::render(report));
      return report.exit_code();
    }
  } catch (const cvcond::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
