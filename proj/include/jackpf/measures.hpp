#pragma once

#include <string>

#include "jackpf/partition.hpp"
#include "jackpf/rational.hpp"
#include "jackpf/scalar.hpp"
#include "jackpf/tagged.hpp"

namespace jackpf {

/// Parameters (z, z', theta) of the z-measures; t = z z' / theta is derived.
struct JackParams {
  GaussianRational z;
  GaussianRational zprime;
  Rational theta{1};

  JackParams() = default;
  /// Throws InvalidArgument unless theta > 0.
  JackParams(GaussianRational z, GaussianRational zprime, Rational theta);

  GaussianRational t() const { return z * zprime / GaussianRational(theta); }
};

enum class SeriesClass { Principal, Complementary, Degenerate, Unclassified };

std::string to_string(SeriesClass c);
/// Principal, Complementary or Degenerate: the z-measures are genuine probability measures.
inline bool is_positive_series(SeriesClass c) { return c != SeriesClass::Unclassified; }

/// (t)_n = t (t+1) ... (t+n-1)
GaussianRational pochhammer(const GaussianRational& t, int n);

/// [a]_n: (a+1)(a+3)...(a+n-1) for even n, a(a+2)...(a+n-1) for odd n, 1 for n = 0.
GaussianRational bracket(const GaussianRational& a, int n);

/// Product over boxes (i,j) of z + (j-1) - (i-1) theta.
GaussianRational gen_pochhammer(const GaussianRational& z, const Partition& lambda, const Rational& theta);
/// Same value through the row form prod_i (z - (i-1) theta)_{lambda_i}.
GaussianRational gen_pochhammer_rows(const GaussianRational& z, const Partition& lambda, const Rational& theta);

/// Hook products: prod over boxes of arm + leg*theta + 1, and arm + leg*theta + theta.
Rational hook_H(const Partition& lambda, const Rational& theta);
Rational hook_Hprime(const Partition& lambda, const Rational& theta);

/// Gamma-quotient forms of the hook products, evaluated with log-Gamma in binary64.
double hook_H_gamma(const Partition& lambda, const Rational& theta);
double hook_Hprime_gamma(const Partition& lambda, const Rational& theta);

/// M^{(n)}_{z,z',theta}(lambda) with n = |lambda|. Throws SingularParameters when (t)_n = 0.
GaussianRational z_measure_n(const Partition& lambda, const JackParams& p);

/// (1-xi)^t prefactor shared by the mixed z-measures.
Prefactor mixed_prefactor(const JackParams& p, const Rational& xi);

/// Mixed z-measure (1-xi)^t xi^{|lambda|} (z)(z') / (H H'); the value lives in the ring of base xi.
TaggedScalar mixed_z_measure(const Partition& lambda, const JackParams& p, const Rational& xi);

/// Mass of level n under the mixed z-measure without the prefactor: (t)_n xi^n / n!.
GaussianRational mixed_degree_mass(const GaussianRational& t, const Rational& xi, int n);

/// n! theta^n / (H H').
Rational plancherel_n(const Partition& lambda, const Rational& theta);

/// e^{-eta} eta^{|lambda|} theta^{|lambda|} / (H H'); the value lives in the ring of base 2 eta.
TaggedScalar poisson_plancherel(const Partition& lambda, const Rational& theta, const Rational& eta);

/// Mass of level n under the poissonized Plancherel measure without e^{-eta}: eta^n / n!.
Rational poisson_degree_mass(const Rational& eta, int n);

/// Poissonized Plancherel measure through the Frobenius coordinates of lambda u lambda
/// (theta = 2) or lambda' u lambda' (theta = 1/2). Throws InvalidArgument for other theta.
TaggedScalar frobenius_plancherel(const Partition& lambda, const Rational& eta, const Rational& theta);

/// Mixed z-measure through the same Frobenius coordinates, theta in {1/2, 2}.
TaggedScalar frobenius_z_measure(const Partition& lambda, const JackParams& p, const Rational& xi);

SeriesClass classify_parameters(const JackParams& p);

}  // namespace jackpf
