#pragma once

#include <array>
#include <complex>
#include <memory>
#include <string>

#include "jackpf/rational.hpp"

namespace jackpf {

/// The ring Q(i)[s]/(s^4 - c) for a positive rational c, where s stands for the
/// real positive fourth root of c.
///
/// When c is a rational square (or fourth power) the polynomial s^4 - c is
/// reducible and the quotient ring has zero divisors. The ring therefore also
/// records the minimal polynomial of the real root: s^2 = sqrt(c) (degree 2) or
/// s = c^{1/4} (degree 1). Equality, zero tests and inversion are done modulo that
/// minimal polynomial, so the scalars form a field in every case.
class QuarticRing {
 public:
  /// Throws InvalidArgument unless c > 0.
  static std::shared_ptr<const QuarticRing> make(const Rational& c);

  const Rational& base() const { return base_; }
  /// Degree of the minimal polynomial of c^{1/4} over Q(i): 1, 2 or 4.
  int degree() const { return degree_; }
  /// sqrt(c) when degree() <= 2.
  const Rational& square_root() const { return sqrt_; }
  /// c^{1/4} when degree() == 1.
  const Rational& fourth_root() const { return fourth_; }
  double root_value() const { return root_value_; }

  bool operator==(const QuarticRing& o) const { return base_ == o.base_; }

 private:
  explicit QuarticRing(const Rational& c);

  Rational base_;
  Rational sqrt_{0};
  Rational fourth_{0};
  int degree_ = 4;
  double root_value_ = 0.0;
};

using RingPtr = std::shared_ptr<const QuarticRing>;

/// Exact element a0 + a1 s + a2 s^2 + a3 s^3 of Q(i)[s]/(s^4 - c).
///
/// Coefficients are kept reduced by s^4 -> c only; see QuarticRing for how
/// equality is decided when c is a square.
class AlgebraicScalar {
 public:
  using Coeffs = std::array<GaussianRational, 4>;

  explicit AlgebraicScalar(RingPtr ring);
  AlgebraicScalar(RingPtr ring, GaussianRational constant);
  AlgebraicScalar(RingPtr ring, Coeffs coeffs);

  static AlgebraicScalar zero(RingPtr ring) { return AlgebraicScalar(std::move(ring)); }
  static AlgebraicScalar one(RingPtr ring) { return AlgebraicScalar(std::move(ring), GaussianRational(1)); }
  /// The generator s itself.
  static AlgebraicScalar generator(RingPtr ring);

  const Coeffs& coeffs() const { return coeffs_; }
  const GaussianRational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const Rational& base() const { return ring_->base(); }
  const RingPtr& ring() const { return ring_; }

  /// Coefficients reduced modulo the minimal polynomial of c^{1/4}; entries at
  /// index >= ring().degree() are zero.
  Coeffs canonical() const;

  bool is_zero() const;
  /// True when the value lies in Q(i), i.e. the canonical form is constant.
  bool is_constant() const;
  /// Constant term of the canonical form (meaningful when is_constant()).
  GaussianRational constant_value() const { return canonical()[0]; }
  /// True when every canonical coefficient has zero imaginary part.
  bool is_real() const;

  AlgebraicScalar inverse() const;
  AlgebraicScalar conj() const;

  AlgebraicScalar& operator+=(const AlgebraicScalar& o);
  AlgebraicScalar& operator-=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const AlgebraicScalar& o);
  AlgebraicScalar& operator/=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const GaussianRational& k);

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
  friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const GaussianRational& k) { return a *= k; }
  friend AlgebraicScalar operator*(const GaussianRational& k, AlgebraicScalar a) { return a *= k; }
  AlgebraicScalar operator-() const;

  /// Field equality (same base required, else BaseMismatch).
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);

 private:
  void check_same_ring(const AlgebraicScalar& o, const char* op) const;

  RingPtr ring_;
  Coeffs coeffs_;
};

/// c^{k/4} = c^{floor(k/4)} s^{k mod 4} in the ring of base c.
AlgebraicScalar quarter_power(const RingPtr& ring, long k);
AlgebraicScalar quarter_power(const Rational& c, long k);

/// Substitutes the real positive root for s.
std::complex<double> to_float(const AlgebraicScalar& a);
std::complex<double> to_float(const GaussianRational& g);
double to_double(const Rational& q);

std::string to_string(const AlgebraicScalar& a);

}  // namespace jackpf
