#include <doctest.h>

#include <cmath>
#include <random>

#include "jackpf/ensemble.hpp"
#include "jackpf/error.hpp"
#include "oracles.hpp"

using namespace jackpf;

namespace {

const Rational kXi = make_rational(1, 16);
const Rational kEta = make_rational(1, 2);

PointLabel lp(int twice) { return {HalfInt(twice), Copy::Prime}; }
PointLabel ld(int twice) { return {HalfInt(twice), Copy::DoublePrime}; }

AlgebraicScalar c(const RingPtr& r, const Rational& q) { return AlgebraicScalar(r, GaussianRational(q)); }

SplitConfig cfg(std::initializer_list<int> minus, std::initializer_list<int> plus) {
  SplitConfig x;
  for (int t : minus) x.minus.emplace_back(t);
  for (int t : plus) x.plus.emplace_back(t);
  return x;
}

/// h in binary64 straight from the defining formula.
std::complex<double> h_float(const HSpec& s, int twice) {
  const double x = twice / 2.0, ax = std::abs(x);
  const int n = static_cast<int>(ax - 0.5);
  auto br = [&](std::complex<double> a) {
    std::complex<double> r = 1.0;
    for (int k = n % 2 == 0 ? 1 : 0; k <= n - 1; k += 2) r *= a + static_cast<double>(k);
    return r;
  };
  const std::complex<double> z = to_float(s.z()), zp = to_float(s.zprime());
  const double fact = std::tgamma(n + 1.0);
  switch (s.kind()) {
    case HKind::Plancherel:
      return std::pow(2 * to_double(s.eta()), ax / 2) / fact;
    case HKind::ZTheta2:
      return (x > 0 ? br(z + 1.0) * br(zp + 1.0) : br(-z) * br(-zp)) * std::pow(to_double(s.xi()), ax / 2) / fact;
    case HKind::ZHalf:
      return (x > 0 ? br(-2.0 * z + 1.0) * br(-2.0 * zp + 1.0) : br(2.0 * z) * br(2.0 * zp)) *
             std::pow(to_double(s.xi()), ax / 2) / fact;
  }
  return 0.0;
}

AlgebraicScalar random_scalar(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  AlgebraicScalar::Coeffs co;
  for (auto& g : co) g = GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return AlgebraicScalar(ring, co);
}

SkewMatrix random_skew(const RingPtr& ring, int dim, std::mt19937& rng) {
  SkewMatrix m(ring, std::vector<PointLabel>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) m.set(i, j, random_scalar(ring, rng));
  }
  return m;
}

}  // namespace

TEST_CASE("HSpec validation and normalizers") {
  CHECK_THROWS_AS(HSpec::z_theta2(4, 3, Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(HSpec::z_half(4, 3, Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(HSpec::plancherel(Rational(0)), InvalidArgument);
  CHECK(HSpec::z_theta2(4, 3, kXi).normalizer() == Prefactor::power(make_rational(15, 16), GaussianRational(-6)));
  CHECK(HSpec::z_half(4, 3, kXi).normalizer() == Prefactor::power(make_rational(15, 16), GaussianRational(-24)));
  CHECK(HSpec::plancherel(kEta).normalizer() == Prefactor::exp(GaussianRational(kEta)));
  CHECK(HSpec::plancherel(kEta).ring()->base() == 1);
}

TEST_CASE("h examples") {
  const auto pl = HSpec::plancherel(make_rational(1, 3));
  CHECK(h_eval(pl, HalfInt(1)) == quarter_power(pl.ring(), 1));
  const auto zt = HSpec::z_theta2(4, 3, make_rational(1, 3));
  CHECK(h_eval(zt, HalfInt(1)) == quarter_power(zt.ring(), 1));
  CHECK(h_eval(zt, HalfInt(-3)) == quarter_power(zt.ring(), 3) * GaussianRational(12));
}

TEST_CASE("h agrees with a floating evaluation of its formula") {
  const std::vector<HSpec> specs = {HSpec::z_theta2(GaussianRational(1, 1), GaussianRational(1, -1), make_rational(1, 3)),
                                    HSpec::z_half(make_rational(1, 3), make_rational(5, 3), make_rational(2, 5)),
                                    HSpec::plancherel(make_rational(3, 4))};
  for (const auto& s : specs) {
    for (int t = -17; t <= 17; t += 2) {
      const auto want = h_float(s, t);
      CHECK(std::abs(to_float(h_eval(s, HalfInt(t))) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("h may vanish for degenerate parameters") {
  // z = -2: [z+1]_2 = (-1) + 1 = 0
  const auto s = HSpec::z_theta2(-2, make_rational(-3, 2), make_rational(1, 3));
  CHECK(h_eval(s, HalfInt(5)).is_zero());
  const auto by_degree = pf_J_plus_L_by_degree(s, 7);
  for (int n = 0; n <= 7; ++n) CHECK(by_degree[static_cast<std::size_t>(n)] == degree_mass(s, n));
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon(HalfInt(-3), HalfInt(-1)) == 1);
  CHECK(epsilon(HalfInt(-1), HalfInt(-3)) == -1);
  CHECK(epsilon(HalfInt(-1), HalfInt(1)) == 0);
  CHECK(epsilon(HalfInt(5), HalfInt(5)) == 0);
  for (int a = -9; a <= 9; a += 2) {
    for (int b = -9; b <= 9; b += 2) CHECK(epsilon(HalfInt(a), HalfInt(b)) == -epsilon(HalfInt(b), HalfInt(a)));
  }
}

TEST_CASE("l_entry examples") {
  const auto s = HSpec::z_theta2(4, 3, make_rational(1, 3));
  const auto& r = s.ring();
  CHECK(l_entry(s, lp(-3), lp(-1)) == c(r, 1));
  CHECK(l_entry(s, ld(-3), ld(1)) == h_eval(s, HalfInt(-3)) * h_eval(s, HalfInt(1)) * GaussianRational(make_rational(-1, 2)));
  CHECK(l_entry(s, lp(3), lp(5)).is_zero());
  CHECK(l_entry(s, ld(3), ld(5)).is_zero());
  // B block: (x'', y') = h(x)h(y)/(x-y), (x'', y'') = h(x)h(y-1)/(x-y+1)
  CHECK(l_entry(s, ld(-1), lp(3)) == h_eval(s, HalfInt(-1)) * h_eval(s, HalfInt(3)) * GaussianRational(make_rational(-1, 2)));
  CHECK(l_entry(s, ld(-1), ld(3)) == h_eval(s, HalfInt(-1)) * h_eval(s, HalfInt(1)) * GaussianRational(Rational(-1)));
  CHECK(l_entry(s, lp(-1), ld(3)).is_zero());
  CHECK(l_entry(s, lp(-1), lp(3)).is_zero());
  // skew symmetry
  CHECK(l_entry(s, lp(3), ld(-1)) == -l_entry(s, ld(-1), lp(3)));
}

TEST_CASE("l_submatrix examples") {
  const auto s = HSpec::z_theta2(4, 3, kXi);
  CHECK(l_submatrix(s, SplitConfig{}).dimension() == 0);
  const auto m = l_submatrix(s, cfg({-3}, {1}));
  REQUIRE(m.dimension() == 4);
  CHECK(m.at(0, 2) == c(s.ring(), 1));
  CHECK(m.at(1, 3) == h_eval(s, HalfInt(-3)) * h_eval(s, HalfInt(1)) * GaussianRational(make_rational(-1, 2)));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(2, 3).is_zero());
  CHECK(m.at(0, 3).is_zero());
  CHECK(m.at(1, 2).is_zero());
  const auto d = m.to_dense();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(d(i, j) == -d(j, i));
  }
  CHECK_THROWS_AS(SkewMatrix(s.ring(), std::vector<PointLabel>(2)).set(1, 1, c(s.ring(), 1)), InvalidArgument);
}

TEST_CASE("Pfaffian examples") {
  const auto ring = QuarticRing::make(make_rational(1, 3));
  std::mt19937 rng(5);
  SkewMatrix two(ring, std::vector<PointLabel>(2));
  const auto a = random_scalar(ring, rng);
  two.set(0, 1, a);
  CHECK(pfaffian(two) == a);
  const auto m = random_skew(ring, 4, rng);
  CHECK(pfaffian(m) == m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) + m.at(0, 3) * m.at(1, 2));
  CHECK(pfaffian(SkewMatrix(ring, {})) == AlgebraicScalar::one(ring));
  CHECK_THROWS_AS(pfaffian(SkewMatrix(ring, std::vector<PointLabel>(3))), InvalidArgument);

  const auto s = HSpec::z_theta2(4, 3, make_rational(1, 3));
  CHECK(pfaffian(l_submatrix(s, embed_theta2(Partition({1})))) == c(s.ring(), 6 * make_rational(1, 3)));
}

TEST_CASE("Pfaffian against permutation and Leibniz oracles") {
  std::mt19937 rng(9);
  for (const auto& base : {make_rational(1, 3), make_rational(1, 16), make_rational(9, 4)}) {
    const auto ring = QuarticRing::make(base);
    for (int dim = 2; dim <= 8; dim += 2) {
      const auto m = random_skew(ring, dim, rng);
      const auto pf = pfaffian(m);
      CHECK(pf == oracle::pfaffian_by_permutations(m.to_dense()));
      CHECK(pfaffian_elimination(m.to_dense()) == pf);
      if (dim <= 6) CHECK(pf * pf == oracle::determinant_leibniz(m.to_dense()));
      CHECK(pf * pf == determinant(m.to_dense()));
    }
  }
}

TEST_CASE("expansion and elimination agree past the dispatch threshold") {
  std::mt19937 rng(13);
  const auto ring = QuarticRing::make(make_rational(1, 16));
  for (int dim : {12, 14}) {
    auto m = random_skew(ring, dim, rng);
    // sparsify so that elimination must pivot
    for (int i = 0; i < dim; i += 3) m.set(0, i == 0 ? 1 : i, AlgebraicScalar::zero(ring));
    CHECK(pfaffian_expansion(m) == pfaffian_elimination(m.to_dense()));
  }
}

TEST_CASE("closed form examples") {
  const auto pl = HSpec::plancherel(make_rational(1, 3));
  CHECK(pf_closed_form(pl, SplitConfig{}) == AlgebraicScalar::one(pl.ring()));
  const auto two_eta = make_rational(2, 3);
  CHECK(pf_closed_form(pl, embed_theta2(Partition({2}))) == c(pl.ring(), two_eta * two_eta / 12));
  CHECK(pf_closed_form(pl, cfg({-1}, {1})).is_zero());
  CHECK(pfaffian(l_submatrix(pl, cfg({-1}, {1}))).is_zero());
}

TEST_CASE("prob_L examples") {
  const auto s = HSpec::z_theta2(4, 3, make_rational(1, 3));
  const auto empty = prob_L(s, SplitConfig{});
  CHECK(empty.prefactor == Prefactor::power(make_rational(2, 3), GaussianRational(6)));
  CHECK(empty.value == AlgebraicScalar::one(s.ring()));
  CHECK(prob_L(s, embed_theta2(Partition({1}))) == mixed_z_measure(Partition({1}), s.jack_params(), s.xi()));
  const auto pl = HSpec::plancherel(kEta);
  const auto p1 = prob_L(pl, embed_theta2(Partition({1})));
  CHECK(p1.prefactor == Prefactor::exp(GaussianRational(-kEta)));
  CHECK(p1.value == c(pl.ring(), kEta));
}

TEST_CASE("partial sums of Pf(J+L)") {
  const auto pl = HSpec::plancherel(kEta);
  CHECK(pf_J_plus_L_partial(pl, 0) == AlgebraicScalar::one(pl.ring()));
  Rational want = 0;
  for (int n = 0; n <= 9; ++n) want += pow(kEta, n) / Rational(factorial(static_cast<unsigned long>(n)));
  CHECK(pf_J_plus_L_partial(pl, 9) == c(pl.ring(), want));

  const auto zt = HSpec::z_theta2(4, 3, kXi);
  Rational wz = 0;
  for (int n = 0; n <= 8; ++n) wz += pochhammer(6, n).re() * pow(kXi, n) / Rational(factorial(static_cast<unsigned long>(n)));
  CHECK(pf_J_plus_L_partial(zt, 8) == c(zt.ring(), wz));
  CHECK_THROWS_AS(pf_J_plus_L_partial(zt, 15), CapExceeded);
}

TEST_CASE("closed form and theorems on small diagrams, all kinds") {
  const std::vector<HSpec> specs = {
      HSpec::z_theta2(GaussianRational(1, 1), GaussianRational(1, -1), make_rational(1, 3)),
      HSpec::z_half(make_rational(1, 3), make_rational(5, 3), make_rational(1, 3)),
      HSpec::z_half(4, 3, kXi),
      HSpec::plancherel(kEta),
  };
  for (const auto& s : specs) {
    for (const auto& lambda : enumerate_partitions_up_to(6)) {
      const SplitConfig x = embed(lambda, s.embed_mode());
      CHECK(pfaffian(l_submatrix(s, x)) == pf_closed_form(s, x));
      const auto prob = prob_L(s, x);
      if (s.kind() == HKind::Plancherel) {
        CHECK(prob == poisson_plancherel(lambda, Rational(2), kEta));
        CHECK(prob_L(s, embed_theta_half(lambda)) == poisson_plancherel(lambda, make_rational(1, 2), kEta));
      } else {
        CHECK(prob == mixed_z_measure(lambda, s.jack_params(), s.xi()));
      }
    }
  }
}
