#ifndef NOET_RATIONAL_HPP
#define NOET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "noet/errors.hpp"

namespace noet {

using Int = mpz_class;

// Exact rational number, always stored canonical: denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1. Equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Int& n) : v_(n) {}

  static Rational make(const Int& num, const Int& den) {
    if (den == 0) fail("ZeroDenominator", "rational with denominator 0");
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }
  static Rational make(long num, long den) { return make(Int(num), Int(den)); }

  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(const std::string& text);

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(-v_, 0); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_, 0); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_, 0); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_, 0); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) fail("ZeroDenominator", "division by zero rational");
    return Rational(v_ / o.v_, 0);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) fail("ZeroInverse", "inverse of zero rational");
    return Rational(1 / v_, 0);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // Canonical text: "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  // mpq arithmetic keeps canonical form; this ctor trusts its input.
  Rational(mpq_class v, int) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace noet

#endif
