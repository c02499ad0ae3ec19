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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cvcond {

using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms. Prefer this over the two-argument mpq_class
// constructor, which does not canonicalize.
inline Rational frac(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Largest square-free divisor decomposition: n = k^2 * s with s square-free.
// Returns {k, s}. Requires n >= 0.
std::pair<Integer, Integer> square_free_split(const Integer& n);

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// d is square-free and non-negative. A scalar with b == 0 is a plain
/// rational and carries d == 0, so rationals mix freely with any field.
/// Two scalars with nonzero surd parts must share d.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}  // NOLINT: implicit by design
  QuadScalar(int v) : a_(v) {}   // NOLINT
  QuadScalar(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT

  // a + b*sqrt(d); d need not be square-free, it is reduced here.
  QuadScalar(const Rational& a, const Rational& b, const Integer& d);

  // Exact square root of a non-negative rational.
  static QuadScalar sqrt_of(const Rational& q);
  static QuadScalar parse(const std::string& text);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long discriminant() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }
  bool is_zero() const { return b_ == 0 && a_ == 0; }
  int sign() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);
  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  QuadScalar inverse() const;
  QuadScalar conjugate() const;  // a - b*sqrt(d)
  QuadScalar abs() const { return sign() < 0 ? -*this : *this; }
  Integer floor() const;

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

 private:
  void normalize();
  static long common_d(const QuadScalar& x, const QuadScalar& y);

  Rational a_{0};
  Rational b_{0};
  long d_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

/// An angle in units of 2*pi, taken modulo 1.
///
/// Rational values are reduced into [0, 1). Irrational values are kept as
/// they are; they can never be trivial.
class PhaseFraction {
 public:
  PhaseFraction() = default;
  explicit PhaseFraction(const QuadScalar& x);

  const QuadScalar& value() const { return v_; }
  bool is_trivial() const { return v_.is_integer(); }

  PhaseFraction operator-() const { return PhaseFraction(-v_); }
  friend PhaseFraction operator+(const PhaseFraction& x, const PhaseFraction& y) {
    return PhaseFraction(x.v_ + y.v_);
  }
  friend PhaseFraction operator-(const PhaseFraction& x, const PhaseFraction& y) {
    return PhaseFraction(x.v_ - y.v_);
  }
  friend PhaseFraction operator*(long k, const PhaseFraction& x) {
    return PhaseFraction(QuadScalar(k) * x.v_);
  }
  friend bool operator==(const PhaseFraction& x, const PhaseFraction& y) {
    return (x.v_ - y.v_).is_integer();
  }

  // Representative in (-1/2, 1/2] for rational phases.
  QuadScalar symmetric() const;
  std::string str() const { return v_.str(); }

 private:
  QuadScalar v_;
};

PhaseFraction phase_reduce(const QuadScalar& x);
std::ostream& operator<<(std::ostream& os, const PhaseFraction& x);

}  // namespace cvcond
