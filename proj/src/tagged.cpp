#include "jackpf/tagged.hpp"

#include <cmath>

namespace jackpf {

std::complex<double> Prefactor::to_float() const {
  const std::complex<double> e = jackpf::to_float(exponent);
  switch (kind) {
    case Kind::None:
      return 1.0;
    case Kind::Power:
      return std::exp(e * std::log(to_double(base)));
    case Kind::Exp:
      return std::exp(e);
  }
  return 1.0;
}

std::optional<GaussianRational> Prefactor::exact() const {
  if (kind == Kind::None || exponent.is_zero()) return GaussianRational(1);
  if (kind == Kind::Power && exponent.is_real() && is_integer(exponent.re())) {
    return GaussianRational(pow(base, exponent.re().get_num().get_si()));
  }
  return std::nullopt;
}

std::string Prefactor::to_string() const {
  switch (kind) {
    case Kind::None:
      return "1";
    case Kind::Power:
      return "(" + jackpf::to_string(base) + ")^(" + jackpf::to_string(exponent) + ")";
    case Kind::Exp:
      return "exp(" + jackpf::to_string(exponent) + ")";
  }
  return "1";
}

bool operator==(const Prefactor& a, const Prefactor& b) {
  auto trivial = [](const Prefactor& p) { return p.kind == Prefactor::Kind::None || p.exponent.is_zero(); };
  if (trivial(a) || trivial(b)) return trivial(a) && trivial(b);
  return a.kind == b.kind && a.base == b.base && a.exponent == b.exponent;
}

std::optional<AlgebraicScalar> TaggedScalar::exact() const {
  auto p = prefactor.exact();
  if (!p) return std::nullopt;
  return value * *p;
}

}  // namespace jackpf
