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

#include "cvcond/quad_field.hpp"

#include <cctype>
#include <ostream>

#include "cvcond/errors.hpp"

namespace cvcond {

std::pair<Integer, Integer> square_free_split(const Integer& n) {
  if (n < 0) throw Error("square_free_split: negative argument");
  Integer k = 1, s = 1, m = n;
  if (m == 0) return {0, 0};
  for (Integer p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      k *= p;
    }
    if (m % p == 0) {
      m /= p;
      s *= p;
    }
  }
  s *= m;
  return {k, s};
}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Integer& d)
    : a_(a), b_(b) {
  if (d < 0) throw Error("QuadScalar: negative discriminant");
  auto [k, s] = square_free_split(d);
  if (s == 0) {
    b_ = 0;
  } else if (s == 1) {
    a_ += b_ * Rational(k);
    b_ = 0;
  } else {
    b_ *= Rational(k);
    if (!s.fits_slong_p()) throw Error("QuadScalar: discriminant too large");
    d_ = s.get_si();
  }
  normalize();
}

void QuadScalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 0;
}

QuadScalar QuadScalar::sqrt_of(const Rational& q) {
  if (q < 0) throw Error("sqrt_of: negative argument");
  // sqrt(p/r) = sqrt(p*r)/r
  Integer pr = q.get_num() * q.get_den();
  return QuadScalar(0, frac(1, 1) / Rational(q.get_den()), pr);
}

long QuadScalar::common_d(const QuadScalar& x, const QuadScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw DiscriminantMismatch("sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                             std::to_string(y.d_) + ")");
}

int QuadScalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;  // a^2 == b^2 d is impossible for square-free d > 1
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  long d = common_d(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) { return *this += -o; }

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  long d = common_d(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of 0");
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  QuadScalar r = conjugate();
  r.a_ /= norm;
  r.b_ /= norm;
  r.normalize();
  return r;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw DivisionByZero(str() + " / 0");
  common_d(*this, o);
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {
mpf_class to_mpf(const QuadScalar& x) {
  const unsigned prec = 256;
  mpf_class a(x.rational_part(), prec);
  if (x.is_rational()) return a;
  mpf_class r(x.discriminant(), prec);
  mpf_class s(0, prec);
  mpf_sqrt(s.get_mpf_t(), r.get_mpf_t());
  mpf_class b(x.surd_part(), prec);
  return a + b * s;
}
}  // namespace

Integer QuadScalar::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  mpf_class approx = to_mpf(*this);
  mpf_class fl(0, 256);
  mpf_floor(fl.get_mpf_t(), approx.get_mpf_t());
  Integer k(fl);
  while (QuadScalar(Rational(k)) > *this) --k;
  while (QuadScalar(Rational(k + 1)) <= *this) ++k;
  return k;
}

double QuadScalar::to_double() const { return to_mpf(*this).get_d(); }

long double QuadScalar::to_long_double() const {
  if (is_rational()) {
    return static_cast<long double>(a_.get_d());
  }
  // Split into a double-rounded head and a residual for extra precision.
  mpf_class v = to_mpf(*this);
  double head = v.get_d();
  mpf_class rest = v - mpf_class(head, 256);
  return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
}

namespace {
std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}
}  // namespace

std::string QuadScalar::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  std::string bpart = (mag == 1) ? surd : rational_str(mag) + "*" + surd;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
  return rational_str(a_) + (b_ < 0 ? " - " : " + ") + bpart;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.str(); }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QuadScalar parse() {
    skip();
    QuadScalar total;
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) {
        if (first) fail("empty input");
        break;
      }
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      QuadScalar t = term();
      try {
        total += sign > 0 ? t : -t;
      } catch (const DiscriminantMismatch&) {
        fail("mixed surds");
      }
      first = false;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("'" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(const char* lit) { return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0; }

  Integer integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    Integer p = integer();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/' && !at("/sqrt")) {
      ++pos_;
      Integer q = integer();
      if (q == 0) fail("zero denominator");
      Rational r(p, q);
      r.canonicalize();
      return r;
    }
    return Rational(p);
  }

  QuadScalar surd() {
    pos_ += 5;  // "sqrt("
    Rational inner = rational();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return QuadScalar::sqrt_of(inner);
  }

  QuadScalar term() {
    skip();
    if (at("sqrt(")) return surd();
    Rational coef = rational();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      if (!at("sqrt(")) fail("expected sqrt(");
      return QuadScalar(coef) * surd();
    }
    return QuadScalar(coef);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QuadScalar QuadScalar::parse(const std::string& text) { return Parser(text).parse(); }

PhaseFraction::PhaseFraction(const QuadScalar& x) : v_(x) {
  if (x.is_rational()) v_ = x - QuadScalar(Rational(x.floor()));
}

QuadScalar PhaseFraction::symmetric() const {
  if (!v_.is_rational()) return v_;
  if (v_ > QuadScalar(frac(1, 2))) return v_ - QuadScalar(1);
  return v_;
}

PhaseFraction phase_reduce(const QuadScalar& x) { return PhaseFraction(x); }

std::ostream& operator<<(std::ostream& os, const PhaseFraction& x) { return os << x.str(); }

}  // namespace cvcond
