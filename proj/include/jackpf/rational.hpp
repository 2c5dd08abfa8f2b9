#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jackpf {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

/// Always "p/q", including "n/1" for integers.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Rational floor(const Rational& q);

/// Largest integer power of q, k may be negative. q must be nonzero when k < 0.
Rational pow(const Rational& q, long k);

/// Exact square root when q is the square of a rational, otherwise false.
bool exact_sqrt(const Rational& q, Rational& root);

Integer factorial(unsigned long n);

/// Exact element re + i*im of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "a", "a+bi", "a-b i", "bi", "i", "-i" with a, b in the "p/q" format.
GaussianRational parse_gaussian(std::string_view text);

/// "p/q" when real, otherwise "p/q+r/s i".
std::string to_string(const GaussianRational& g);

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace jackpf
