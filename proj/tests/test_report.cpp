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


#include <doctest.h>

#include "cvcond/errors.hpp"
#include "cvcond/report.hpp"

using namespace cvcond;

namespace {

RunConfig taxonomy_config(Mode mode, Taxonomy t, int L = 2) {
  RunConfig c;
  c.mode = mode;
  c.taxonomy = std::move(t);
  c.L = L;
  return c;
}

Taxonomy dbl(long n, long m) {
  Taxonomy t;
  t.name = "double";
  t.n = n;
  t.m = m;
  return t;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("config parsing") {
  auto c = parse_config(R"({"mode": "condense", "taxonomy": {"name": "double", "n": 1, "m": 2}})");
  CHECK(c.mode == Mode::Condense);
  REQUIRE(c.taxonomy.has_value());
  CHECK(c.taxonomy->m == 2);
  CHECK(c.resolved_generators().size() == 2);

  auto g = parse_config(R"({"mode": "full", "generators": [["1", "1"]], "L": 3})");
  CHECK(g.generators.size() == 1);
  CHECK(g.L == 3);
  CHECK(parse_config(write_config(g)) == g);
  CHECK(parse_config(write_config(c)) == c);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"bogus": 1, "taxonomy": "flux"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"mode": "condense"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"taxonomy": "flux", "generators": [["1", "0"]]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"mode": "full", "taxonomy": "flux", "L": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"mode": "sideways", "taxonomy": "flux"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"taxonomy": "torus"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"generators": [["1", "sqrt(2"]]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"generators": [["1"]]})"), ConfigError);
  CHECK_NOTHROW(parse_config(R"({"mode": "condense", "taxonomy": "flux", "L": 1})"));
}

TEST_CASE("condense double(1,2)") {
  auto r = run(taxonomy_config(Mode::Condense, dbl(1, 2)));
  CHECK(r.exit_code() == 0);
  REQUIRE(r.condense.has_value());
  CHECK(r.condense->fusion == std::vector<std::string>{"Z2", "Z4"});
  CHECK(r.condense->gsd_torus == 8);
  REQUIRE(r.condense->anyons.size() == 2);
  CHECK(r.condense->anyons[0].spin == "1/4");
  CHECK(r.condense->anyons[1].spin == "7/8");
  CHECK(r.condense->anyons[1].spin_symmetric == "-1/8");
  auto text = render(r);
  CHECK(contains(text, "a₋₄-analogue: order 4, spin 7/8 ≡ −1/8"));
  CHECK(contains(text, "gsd_torus: 8"));
}

TEST_CASE("even-K fusion row") {
  Taxonomy t;
  t.name = "even-K";
  t.n1 = 1;
  t.n2 = 1;
  t.np = 2;
  auto r = run(taxonomy_config(Mode::Condense, t));
  CHECK(contains(render(r), "fusion: Z2 x Z6"));
}

TEST_CASE("warnings section is omitted when empty") {
  Taxonomy t;
  t.name = "flux-charge";
  t.n = 2;
  auto r = run(taxonomy_config(Mode::Condense, t));
  CHECK(r.warnings.empty());
  CHECK_FALSE(contains(render(r), "[warnings]"));
}

TEST_CASE("boundary double(1,2) finds no gapped boundary") {
  auto r = run(taxonomy_config(Mode::Boundary, dbl(1, 2)));
  REQUIRE(r.lagrangian_subgroups.has_value());
  CHECK(r.lagrangian_subgroups->empty());
  CHECK(contains(render(r), "lagrangian subgroups: none"));
}

TEST_CASE("lattice-verify double(1,2) at L = 3") {
  auto r = run(taxonomy_config(Mode::LatticeVerify, dbl(1, 2), 3));
  CHECK(r.exit_code() == 0);
  REQUIRE(r.lattice.has_value());
  CHECK(r.lattice->logical_summary == "qudit(2) + qudit(4)");
  CHECK(r.lattice->logical_dimension == 8);
  CHECK(r.lattice->violations.empty());
}

TEST_CASE("machine report round trip and determinism") {
  Taxonomy k;
  k.name = "composite";
  k.n = 2;
  for (auto c : {taxonomy_config(Mode::Full, dbl(1, 2)), taxonomy_config(Mode::Boundary, dbl(1, 2)),
                 taxonomy_config(Mode::LatticeVerify, k)}) {
    auto r = run(c);
    auto text = render_machine(r);
    CHECK(parse_report(text) == r);
    CHECK(render_machine(run(c)) == text);
  }
  CHECK_THROWS_AS(parse_report("[]"), ConfigError);
}

TEST_CASE("full run at L = 2 passes every check") {
  auto r = run(taxonomy_config(Mode::Full, dbl(1, 2)));
  for (const auto& ch : r.checks) {
    INFO(ch.name, ": ", ch.detail);
    CHECK(ch.pass);
  }
  REQUIRE(r.spectral.has_value());
  CHECK(r.spectral->degeneracy == "8");
  CHECK(r.spectral->layers.size() == 2);
  CHECK(contains(render(r), "[spectrum alpha="));
}
