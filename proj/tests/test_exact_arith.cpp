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

#include <random>

#include "cvcond/errors.hpp"
#include "cvcond/quad_field.hpp"
#include "random_scalars.hpp"

using namespace cvcond;

namespace {

QuadScalar q(const char* s) { return QuadScalar::parse(s); }

// Independent evaluation of a + b sqrt(d) at 256 bits.
mpf_class as_mpf(const QuadScalar& x) {
  mpf_class a(x.rational_part(), 256), b(x.surd_part(), 256), d(x.discriminant(), 256);
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), d.get_mpf_t());
  return a + b * r;
}

}  // namespace

TEST_CASE("field operations on worked values") {
  CHECK(q("1/2 + 1/2*sqrt(2)") * q("1 - sqrt(2)") == QuadScalar(frac(-1, 2)));
  CHECK(q("sqrt(2)") * q("sqrt(2)") == QuadScalar(2));
  CHECK((QuadScalar(3) + QuadScalar(-3)).is_zero());
  CHECK(q("sqrt(8)") == q("2*sqrt(2)"));
  CHECK(QuadScalar::sqrt_of(frac(1, 2)) == q("1/2*sqrt(2)"));
  CHECK(q("sqrt(4)") == QuadScalar(2));
}

TEST_CASE("surd part vanishes for d = 0 and d = 1") {
  QuadScalar one(Rational(3), Rational(5), Integer(1));
  CHECK(one == QuadScalar(8));
  CHECK(one.discriminant() == 0);
  QuadScalar zero(Rational(3), Rational(5), Integer(0));
  CHECK(zero == QuadScalar(3));
}

TEST_CASE("division by zero and mixed surds are rejected") {
  CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), DivisionByZero);
  CHECK_THROWS_AS(q("sqrt(2)") + q("sqrt(3)"), DiscriminantMismatch);
  CHECK_THROWS_AS(QuadScalar::parse("sqrt(2) + sqrt(3)"), ParseError);
  CHECK_THROWS_AS(QuadScalar::parse("1/0"), Error);
  CHECK_THROWS_AS(QuadScalar::parse("abc"), ParseError);
}

TEST_CASE("text form round-trips") {
  for (const char* s : {"0", "-3", "1/2", "-sqrt(2)", "1/2 + 1/2*sqrt(2)", "-1/4 + 1/20*sqrt(5)",
                        "3/7*sqrt(6)", "-2 - sqrt(3)"}) {
    QuadScalar x = q(s);
    CHECK(QuadScalar::parse(x.str()) == x);
    CHECK(x.str() == s);
  }
}

TEST_CASE("phase reduction") {
  CHECK(phase_reduce(QuadScalar(5)).is_trivial());
  CHECK(phase_reduce(QuadScalar(frac(3, 2))).value() == QuadScalar(frac(1, 2)));
  CHECK(phase_reduce(QuadScalar(frac(-1, 8))).value() == QuadScalar(frac(7, 8)));
  CHECK(phase_reduce(QuadScalar(frac(7, 8))).symmetric() == QuadScalar(frac(-1, 8)));
  CHECK(phase_reduce(QuadScalar(frac(1, 2))).symmetric() == QuadScalar(frac(1, 2)));
  CHECK_FALSE(phase_reduce(q("1 + sqrt(2)")).is_trivial());
}

TEST_CASE("floor and sign are exact near integers") {
  CHECK(q("sqrt(2)").floor() == 1);
  CHECK(q("-sqrt(2)").floor() == -2);
  CHECK(q("3 - 2*sqrt(2)").sign() == 1);  // 0.1715...
  CHECK(q("-140/99 + sqrt(2)").sign() == 1);
  CHECK(q("-3/2 + sqrt(2)").sign() == -1);
  CHECK(q("-577/408 + sqrt(2)").sign() == -1);
}

TEST_CASE("field axioms on 10^4 random samples") {
  std::mt19937_64 rng(20240611);
  for (long d : {0L, 2L, 3L, 5L}) {
    for (int t = 0; t < 2500; ++t) {
      QuadScalar x = testing::random_scalar(rng, d), y = testing::random_scalar(rng, d),
                 z = testing::random_scalar(rng, d);
      REQUIRE(x + y == y + x);
      REQUIRE(x * y == y * x);
      REQUIRE((x + y) + z == x + (y + z));
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE((x - x).is_zero());
      if (!y.is_zero()) REQUIRE((x / y) * y == x);
      REQUIRE(phase_reduce(x + y) == phase_reduce(x) + phase_reduce(y));
    }
  }
}

TEST_CASE("ordering agrees with a 256-bit evaluation") {
  std::mt19937_64 rng(7);
  int disagreements = 0;
  for (long d : {2L, 3L, 5L, 6L})
    for (int t = 0; t < 2500; ++t) {
      QuadScalar x = testing::random_scalar(rng, d), y = testing::random_scalar(rng, d);
      int want = cmp(as_mpf(x), as_mpf(y));
      want = (want > 0) - (want < 0);
      int got = (x > y) - (x < y);
      if (got != want) ++disagreements;
      if (x.floor() != Integer(floor(as_mpf(x)))) ++disagreements;
    }
  CHECK(disagreements == 0);
}

TEST_CASE("square-free split") {
  auto [k, s] = square_free_split(Integer(72));
  CHECK(k == 6);
  CHECK(s == 2);
  auto [k1, s1] = square_free_split(Integer(1));
  CHECK(k1 == 1);
  CHECK(s1 == 1);
}
