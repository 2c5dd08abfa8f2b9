#pragma once

#include <complex>
#include <optional>
#include <string>

#include "jackpf/rational.hpp"
#include "jackpf/scalar.hpp"

namespace jackpf {

/// Symbolic scalar prefactor that generally leaves the exact ring: base^exponent
/// (used for (1 - xi)^t with non-integer t) or e^exponent (used for e^{-eta}).
struct Prefactor {
  enum class Kind { None, Power, Exp };

  Kind kind = Kind::None;
  Rational base{1};
  GaussianRational exponent{0};

  static Prefactor none() { return {}; }
  static Prefactor power(Rational base, GaussianRational exponent) {
    return {Kind::Power, std::move(base), std::move(exponent)};
  }
  static Prefactor exp(GaussianRational exponent) { return {Kind::Exp, Rational(1), std::move(exponent)}; }

  Prefactor inverse() const { return {kind, base, -exponent}; }
  std::complex<double> to_float() const;
  /// Exact value when it lies in Q(i): no prefactor, a zero exponent, or a power
  /// with an integer exponent.
  std::optional<GaussianRational> exact() const;
  std::string to_string() const;

  friend bool operator==(const Prefactor& a, const Prefactor& b);
};

/// A value of the form prefactor * value, with value exact.
struct TaggedScalar {
  Prefactor prefactor;
  AlgebraicScalar value;

  std::complex<double> to_float() const { return prefactor.to_float() * jackpf::to_float(value); }
  /// prefactor * value when the prefactor is exact.
  std::optional<AlgebraicScalar> exact() const;

  friend bool operator==(const TaggedScalar& a, const TaggedScalar& b) {
    return a.prefactor == b.prefactor && a.value == b.value;
  }
};

}  // namespace jackpf
