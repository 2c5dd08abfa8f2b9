#include <doctest.h>

#include <cmath>
#include <random>

#include "jackpf/error.hpp"
#include "jackpf/rational.hpp"
#include "jackpf/scalar.hpp"
#include "jackpf/tagged.hpp"

using namespace jackpf;

namespace {

GaussianRational random_gaussian(std::mt19937& rng, int bound = 1000) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 12);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

AlgebraicScalar random_scalar(const RingPtr& ring, std::mt19937& rng, int bound = 1000) {
  AlgebraicScalar::Coeffs c;
  for (auto& g : c) g = random_gaussian(rng, bound);
  return AlgebraicScalar(ring, c);
}

AlgebraicScalar::Coeffs coeffs(long a0, long a1, long a2, long a3) {
  return {GaussianRational(a0), GaussianRational(a1), GaussianRational(a2), GaussianRational(a3)};
}

const std::vector<Rational> kBases = {make_rational(1, 16), make_rational(4, 9), make_rational(1, 3), Rational(2),
                                      make_rational(81, 16)};

}  // namespace

TEST_CASE("rationals are canonical and print as p/q") {
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(7)) == "7/1");
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK(floor(make_rational(-1, 2)) == -1);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(factorial(5) == 120);
}

TEST_CASE("gaussian rationals parse, print and conjugate") {
  CHECK(parse_gaussian("1+i") == GaussianRational(1, 1));
  CHECK(parse_gaussian("1/2-3/4i") == GaussianRational(make_rational(1, 2), make_rational(-3, 4)));
  CHECK(parse_gaussian("-i") == GaussianRational(0, -1));
  CHECK(parse_gaussian("2i") == GaussianRational(0, 2));
  CHECK(parse_gaussian("3") == GaussianRational(3));
  CHECK(to_string(GaussianRational(1, -1)) == "1/1-1/1 i");
  CHECK(to_string(GaussianRational(make_rational(1, 3))) == "1/3");
  std::mt19937 rng(1);
  for (int k = 0; k < 50; ++k) {
    const auto g = random_gaussian(rng);
    CHECK(g.conj().conj() == g);
    if (!g.is_zero()) CHECK((g * g.inverse()).is_one());
    CHECK(parse_gaussian(to_string(g)) == g);
  }
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
}

TEST_CASE("reduction s^4 = c") {
  const auto ring = QuarticRing::make(make_rational(1, 16));
  const auto s = AlgebraicScalar::generator(ring);
  SUBCASE("s * s^3 = c") {
    const auto s3 = AlgebraicScalar(ring, coeffs(0, 0, 0, 1));
    CHECK((s * s3).coeffs()[0] == GaussianRational(make_rational(1, 16)));
  }
  SUBCASE("(xi^{1/4})^4 = 1/16") {
    const auto p = s * s * s * s;
    CHECK(p.coeffs()[0] == GaussianRational(make_rational(1, 16)));
    CHECK(p.coeffs()[1].is_zero());
  }
  SUBCASE("(1 + s)(1 - s) has stored coefficients (1,0,-1,0)") {
    const auto one = AlgebraicScalar::one(ring);
    const auto p = (one + s) * (one - s);
    CHECK(p.coeffs() == coeffs(1, 0, -1, 0));
  }
  SUBCASE("generic base keeps all four coefficients") {
    const auto r3 = QuarticRing::make(make_rational(1, 3));
    const auto t = AlgebraicScalar::generator(r3);
    const auto p = t * t * t * t * t;
    CHECK(p.coeffs()[1] == GaussianRational(make_rational(1, 3)));
    CHECK(r3->degree() == 4);
  }
}

TEST_CASE("quarter_power examples") {
  const Rational c = make_rational(1, 16);
  CHECK(quarter_power(c, 0) == AlgebraicScalar::one(QuarticRing::make(c)));
  CHECK(quarter_power(c, 4).coeffs()[0] == GaussianRational(c));
  const auto q3 = quarter_power(c, 3);
  CHECK(q3.coeffs()[3].is_one());
  CHECK(std::abs(to_float(q3) - std::complex<double>(0.125)) < 1e-15);
  CHECK(std::abs(to_float(quarter_power(c, -1)) - std::complex<double>(2.0)) < 1e-15);
  CHECK_THROWS_AS(quarter_power(Rational(0), 1), InvalidArgument);
}

TEST_CASE("to_float examples") {
  const auto ring = QuarticRing::make(make_rational(1, 16));
  CHECK(to_float(AlgebraicScalar(ring, coeffs(0, 1, 0, 0))) == std::complex<double>(0.5));
  CHECK(to_float(AlgebraicScalar(ring, coeffs(0, 0, 1, 0))) == std::complex<double>(0.25));
  for (const auto& b : kBases) {
    CHECK(to_float(AlgebraicScalar(QuarticRing::make(b), coeffs(1, 0, 0, 0))) == std::complex<double>(1.0));
  }
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937 rng(7);
  for (const auto& base : kBases) {
    const auto ring = QuarticRing::make(base);
    for (int k = 0; k < 20; ++k) {
      const auto a = random_scalar(ring, rng), b = random_scalar(ring, rng), c = random_scalar(ring, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == AlgebraicScalar::zero(ring));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == AlgebraicScalar::one(ring));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("quarter_power exponent law") {
  for (const auto& base : kBases) {
    const auto ring = QuarticRing::make(base);
    for (int k = -16; k <= 16; ++k) {
      for (int m = -16; m <= 16; m += 3) {
        CHECK(quarter_power(ring, k) * quarter_power(ring, m) == quarter_power(ring, k + m));
      }
    }
  }
}

TEST_CASE("to_float is a ring homomorphism") {
  std::mt19937 rng(11);
  for (const auto& base : kBases) {
    const auto ring = QuarticRing::make(base);
    for (int k = 0; k < 30; ++k) {
      const auto a = random_scalar(ring, rng), b = random_scalar(ring, rng);
      const auto fa = to_float(a), fb = to_float(b);
      const auto prod = to_float(a * b), sum = to_float(a + b);
      CHECK(std::abs(prod - fa * fb) <= 1e-12 * std::max(1.0, std::abs(fa) * std::abs(fb)));
      CHECK(std::abs(sum - (fa + fb)) <= 1e-12 * std::max({1.0, std::abs(fa), std::abs(fb)}));
    }
  }
}

TEST_CASE("equality follows the real fourth root when the base is a power") {
  // base 1/16: s = 1/2, so s - 1/2 is zero
  const auto ring = QuarticRing::make(make_rational(1, 16));
  const auto d = AlgebraicScalar::generator(ring) - AlgebraicScalar(ring, GaussianRational(make_rational(1, 2)));
  CHECK(d.is_zero());
  CHECK_THROWS_AS(d.inverse(), DivisionByZero);
  // base 4/9: s^2 = 2/3
  const auto r2 = QuarticRing::make(make_rational(4, 9));
  const auto s = AlgebraicScalar::generator(r2);
  CHECK(s * s == AlgebraicScalar(r2, GaussianRational(make_rational(2, 3))));
  CHECK(!(s == AlgebraicScalar(r2, GaussianRational(make_rational(2, 3)))));
}

TEST_CASE("errors: base mismatch and division by zero") {
  const auto a = AlgebraicScalar::one(QuarticRing::make(make_rational(1, 3)));
  const auto b = AlgebraicScalar::one(QuarticRing::make(make_rational(1, 5)));
  CHECK_THROWS_AS(a + b, BaseMismatch);
  CHECK_THROWS_AS(a * b, BaseMismatch);
  CHECK_THROWS_AS(a / AlgebraicScalar::zero(a.ring()), DivisionByZero);
  CHECK_THROWS_AS(QuarticRing::make(Rational(-1)), InvalidArgument);
  // same base from two separately made rings is fine
  CHECK(a + AlgebraicScalar::one(QuarticRing::make(make_rational(1, 3))) == AlgebraicScalar(a.ring(), GaussianRational(2)));
}

TEST_CASE("complex coefficients and conjugation") {
  const auto ring = QuarticRing::make(make_rational(1, 3));
  const auto z = AlgebraicScalar(ring, GaussianRational(1, 1)) * AlgebraicScalar::generator(ring);
  CHECK((z * z.conj()).is_real());
  CHECK(!z.is_real());
  CHECK(z.conj().conj() == z);
}

TEST_CASE("prefactor tags") {
  const auto p = Prefactor::power(make_rational(15, 16), GaussianRational(6));
  REQUIRE(p.exact().has_value());
  CHECK(*p.exact() == GaussianRational(pow(make_rational(15, 16), 6)));
  CHECK(!Prefactor::power(make_rational(15, 16), GaussianRational(make_rational(1, 2))).exact());
  CHECK(!Prefactor::exp(GaussianRational(-1)).exact());
  CHECK(Prefactor::exp(GaussianRational(0)) == Prefactor::none());
  CHECK(Prefactor::power(Rational(3), GaussianRational(0)) == Prefactor::none());
  CHECK(p.inverse().inverse() == p);
  CHECK(std::abs(Prefactor::exp(GaussianRational(1)).to_float() - std::exp(1.0)) < 1e-15);
  CHECK(std::abs(p.to_float() - std::pow(15.0 / 16.0, 6)) < 1e-15);
}
