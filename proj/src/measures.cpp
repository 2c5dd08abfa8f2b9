#include "jackpf/measures.hpp"

#include <algorithm>
#include <cmath>

#include "jackpf/error.hpp"

namespace jackpf {

JackParams::JackParams(GaussianRational z_, GaussianRational zprime_, Rational theta_)
    : z(std::move(z_)), zprime(std::move(zprime_)), theta(std::move(theta_)) {
  if (sgn(theta) <= 0) throw InvalidArgument("theta must be positive");
}

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::Principal:
      return "principal";
    case SeriesClass::Complementary:
      return "complementary";
    case SeriesClass::Degenerate:
      return "degenerate";
    case SeriesClass::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

GaussianRational pochhammer(const GaussianRational& t, int n) {
  GaussianRational r(1);
  for (int k = 0; k < n; ++k) r *= t + GaussianRational(k);
  return r;
}

GaussianRational bracket(const GaussianRational& a, int n) {
  GaussianRational r(1);
  for (int k = n % 2 == 0 ? 1 : 0; k < n; k += 2) r *= a + GaussianRational(k);
  return r;
}

GaussianRational gen_pochhammer(const GaussianRational& z, const Partition& lambda, const Rational& theta) {
  GaussianRational r(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      r *= z + GaussianRational(Rational(j - 1) - Rational(i - 1) * theta);
    }
  }
  return r;
}

GaussianRational gen_pochhammer_rows(const GaussianRational& z, const Partition& lambda, const Rational& theta) {
  GaussianRational r(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    r *= pochhammer(z - GaussianRational(Rational(i - 1) * theta), lambda.row(i));
  }
  return r;
}

namespace {

template <class Fn>
Rational hook_product(const Partition& lambda, Fn&& factor) {
  const Partition lt = conjugate(lambda);
  Rational r(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      r *= factor(lambda.row(i) - j, lt.row(j) - i);
    }
  }
  return r;
}

}  // namespace

Rational hook_H(const Partition& lambda, const Rational& theta) {
  return hook_product(lambda, [&](int arm, int leg) -> Rational { return Rational(arm + 1) + leg * theta; });
}

Rational hook_Hprime(const Partition& lambda, const Rational& theta) {
  return hook_product(lambda, [&](int arm, int leg) -> Rational { return Rational(arm) + leg * theta + theta; });
}

double hook_H_gamma(const Partition& lambda, const Rational& theta) {
  const double th = to_double(theta);
  const int l = lambda.length();
  double log_h = 0.0;
  for (int i = 1; i <= l; ++i) {
    log_h += std::lgamma(lambda.row(i) - i * th + l * th + 1.0);
    for (int j = i + 1; j <= l; ++j) {
      const double base = lambda.row(i) - lambda.row(j) + (j - i) * th;
      log_h += std::lgamma(base + 1.0 - th) - std::lgamma(base + 1.0);
    }
  }
  return std::exp(log_h);
}

double hook_Hprime_gamma(const Partition& lambda, const Rational& theta) {
  const double th = to_double(theta);
  const int l = lambda.length();
  double log_h = 0.0;
  for (int i = 1; i <= l; ++i) {
    log_h += std::lgamma(lambda.row(i) - i * th + l * th + th) - std::lgamma(th);
    for (int j = i + 1; j <= l; ++j) {
      const double base = lambda.row(i) - lambda.row(j) + (j - i) * th;
      log_h += std::lgamma(base) - std::lgamma(base + th);
    }
  }
  return std::exp(log_h);
}

GaussianRational z_measure_n(const Partition& lambda, const JackParams& p) {
  const int n = lambda.size();
  const GaussianRational tn = pochhammer(p.t(), n);
  if (tn.is_zero()) {
    throw SingularParameters("(t)_" + std::to_string(n) + " vanishes for t = " + to_string(p.t()));
  }
  GaussianRational num = GaussianRational(Rational(factorial(static_cast<unsigned long>(n)))) *
                         gen_pochhammer(p.z, lambda, p.theta) * gen_pochhammer(p.zprime, lambda, p.theta);
  Rational hh = hook_H(lambda, p.theta) * hook_Hprime(lambda, p.theta);
  return num / (tn * GaussianRational(hh));
}

Prefactor mixed_prefactor(const JackParams& p, const Rational& xi) {
  return Prefactor::power(Rational(1) - xi, p.t());
}

namespace {

void check_xi(const Rational& xi) {
  if (sgn(xi) <= 0 || xi >= 1) throw InvalidArgument("xi must lie in (0, 1), got " + to_string(xi));
}

void check_eta(const Rational& eta) {
  if (sgn(eta) <= 0) throw InvalidArgument("eta must be positive, got " + to_string(eta));
}

}  // namespace

TaggedScalar mixed_z_measure(const Partition& lambda, const JackParams& p, const Rational& xi) {
  check_xi(xi);
  const auto ring = QuarticRing::make(xi);
  GaussianRational v = gen_pochhammer(p.z, lambda, p.theta) * gen_pochhammer(p.zprime, lambda, p.theta) /
                       GaussianRational(hook_H(lambda, p.theta) * hook_Hprime(lambda, p.theta));
  AlgebraicScalar value = quarter_power(ring, 4L * lambda.size());
  value *= v;
  return {mixed_prefactor(p, xi), std::move(value)};
}

GaussianRational mixed_degree_mass(const GaussianRational& t, const Rational& xi, int n) {
  return pochhammer(t, n) * GaussianRational(pow(xi, n) / Rational(factorial(static_cast<unsigned long>(n))));
}

Rational plancherel_n(const Partition& lambda, const Rational& theta) {
  const int n = lambda.size();
  return Rational(factorial(static_cast<unsigned long>(n))) * pow(theta, n) /
         (hook_H(lambda, theta) * hook_Hprime(lambda, theta));
}

TaggedScalar poisson_plancherel(const Partition& lambda, const Rational& theta, const Rational& eta) {
  check_eta(eta);
  const auto ring = QuarticRing::make(2 * eta);
  const int n = lambda.size();
  Rational v = pow(eta * theta, n) / (hook_H(lambda, theta) * hook_Hprime(lambda, theta));
  return {Prefactor::exp(GaussianRational(-eta)), AlgebraicScalar(ring, GaussianRational(v))};
}

Rational poisson_degree_mass(const Rational& eta, int n) {
  return pow(eta, n) / Rational(factorial(static_cast<unsigned long>(n)));
}

namespace {

enum class Dual { Theta2, ThetaHalf };

Dual dual_case(const Rational& theta) {
  if (theta == 2) return Dual::Theta2;
  if (theta == Rational(1, 2)) return Dual::ThetaHalf;
  throw InvalidArgument("Frobenius forms need theta in {1/2, 2}, got " + to_string(theta));
}

FrobeniusCoords doubled_coords(const Partition& lambda, Dual d) {
  return to_frobenius(double_union(d == Dual::Theta2 ? lambda : conjugate(lambda)));
}

// prod_{i<j} (P_i - P_j)(Q_i - Q_j) / (prod_{i,j} (P_i + Q_j + 1) prod_i P_i! Q_i!)
Rational frobenius_core(const FrobeniusCoords& f) {
  const int d = f.diagonal();
  Rational num(1), den(1);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) num *= (f.P[i] - f.P[j]) * (f.Q[i] - f.Q[j]);
    for (int j = 0; j < d; ++j) den *= f.P[i] + f.Q[j] + 1;
    den *= Rational(factorial(static_cast<unsigned long>(f.P[i])) * factorial(static_cast<unsigned long>(f.Q[i])));
  }
  return num / den;
}

long frobenius_weight(const FrobeniusCoords& f) {
  long s = 0;
  for (int i = 0; i < f.diagonal(); ++i) s += f.P[i] + f.Q[i] + 1;
  return s;
}

}  // namespace

TaggedScalar frobenius_plancherel(const Partition& lambda, const Rational& eta, const Rational& theta) {
  check_eta(eta);
  const auto f = doubled_coords(lambda, dual_case(theta));
  const auto ring = QuarticRing::make(2 * eta);
  // (2 eta)^{weight / 2}
  AlgebraicScalar value = quarter_power(ring, 2 * frobenius_weight(f));
  value *= GaussianRational(frobenius_core(f));
  return {Prefactor::exp(GaussianRational(-eta)), std::move(value)};
}

TaggedScalar frobenius_z_measure(const Partition& lambda, const JackParams& p, const Rational& xi) {
  check_xi(xi);
  const Dual d = dual_case(p.theta);
  const auto f = doubled_coords(lambda, d);
  const GaussianRational one(1), two(2);
  // theta = 2: [z+1]_P [z'+1]_P [-z]_Q [-z']_Q ; theta = 1/2: [-2z+1]_P [-2z'+1]_P [2z]_Q [2z']_Q
  const GaussianRational a = d == Dual::Theta2 ? p.z : -two * p.z;
  const GaussianRational b = d == Dual::Theta2 ? p.zprime : -two * p.zprime;
  GaussianRational brackets(1);
  for (int i = 0; i < f.diagonal(); ++i) {
    brackets *= bracket(a + one, f.P[i]) * bracket(b + one, f.P[i]) * bracket(-a, f.Q[i]) * bracket(-b, f.Q[i]);
  }
  const auto ring = QuarticRing::make(xi);
  AlgebraicScalar value = quarter_power(ring, 2 * frobenius_weight(f));
  value *= brackets * GaussianRational(frobenius_core(f));
  return {mixed_prefactor(p, xi), std::move(value)};
}

SeriesClass classify_parameters(const JackParams& p) {
  const Rational& theta = p.theta;
  auto on_lattice_cone = [&](const GaussianRational& z) {
    // z = -a + b theta with integers a, b >= 0; a is integral for b in one residue class mod den(theta)
    if (!z.is_real()) return false;
    Rational first = floor(z.re() / theta);
    long b0 = std::max(0L, first.get_num().get_si());
    for (long b = b0; b < b0 + 1 + theta.get_den().get_si(); ++b) {
      Rational a = b * theta - z.re();
      if (sgn(a) >= 0 && is_integer(a)) return true;
    }
    return false;
  };

  if (!p.z.is_real() && p.zprime == p.z.conj() && !on_lattice_cone(p.z)) return SeriesClass::Principal;
  if (!p.z.is_real() || !p.zprime.is_real()) return SeriesClass::Unclassified;

  const Rational& z = p.z.re();
  const Rational& zp = p.zprime.re();
  auto positive_integer = [](const Rational& q) { return is_integer(q) && sgn(q) > 0; };

  // (1) z = m theta, z' > (m-1) theta, or symmetrically
  auto clause1 = [&](const Rational& a, const Rational& b) {
    Rational m = a / theta;
    return positive_integer(m) && b > (m - 1) * theta;
  };
  // (2) z = -m, z' < -m + 1, or symmetrically
  auto clause2 = [&](const Rational& a, const Rational& b) {
    Rational m = -a;
    return positive_integer(m) && b < -m + 1;
  };
  if (clause1(z, zp) || clause1(zp, z) || clause2(z, zp) || clause2(zp, z)) return SeriesClass::Degenerate;

  // Z + Z theta = (1/q) Z for theta = p/q in lowest terms
  const Rational step(Integer(1), theta.get_den());
  const Rational qz = z / step, qzp = zp / step;
  if (!is_integer(qz) && !is_integer(qzp) && floor(qz) == floor(qzp)) return SeriesClass::Complementary;
  return SeriesClass::Unclassified;
}

}  // namespace jackpf
