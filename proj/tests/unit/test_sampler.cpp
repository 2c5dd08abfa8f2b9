#include <doctest.h>

#include <map>

#include "jackpf/error.hpp"
#include "jackpf/sampler.hpp"

using namespace jackpf;

namespace {

SamplerConfig plancherel(int n) {
  SamplerConfig c;
  c.family = SamplerConfig::Family::Plancherel;
  c.params.theta = 2;
  c.n = n;
  return c;
}

SamplerConfig zmeasure(GaussianRational z, GaussianRational zp, Rational theta, int n) {
  SamplerConfig c;
  c.family = SamplerConfig::Family::ZMeasure;
  c.params = JackParams(std::move(z), std::move(zp), std::move(theta));
  c.n = n;
  return c;
}

std::vector<long> histogram(const PartitionSampler& s, const std::vector<Partition>& ys, long draws, std::uint64_t seed) {
  Rng rng(seed);
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < ys.size(); ++k) index[ys[k]] = k;
  std::vector<long> counts(ys.size(), 0);
  for (long i = 0; i < draws; ++i) ++counts[index.at(s.draw(rng))];
  return counts;
}

}  // namespace

TEST_CASE("uniform draws are dyadic in [0,1)") {
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const Rational u = uniform_dyadic(rng);
    CHECK(sgn(u) >= 0);
    CHECK(u < 1);
    CHECK(u.get_den() <= Integer("9007199254740992"));
  }
}

TEST_CASE("discrete sampler") {
  const DiscreteSampler s({Rational(1), Rational(0), Rational(3)});
  CHECK(s.probability(0) == make_rational(1, 4));
  CHECK(s.probability(1) == 0);
  CHECK(s.probability(2) == make_rational(3, 4));
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) CHECK(s.draw(rng) != 1);
  CHECK_THROWS_AS(DiscreteSampler({Rational(-1), Rational(2)}), InvalidArgument);
  CHECK_THROWS_AS(DiscreteSampler({Rational(0)}), InvalidArgument);
}

TEST_CASE("fixed seed gives a reproducible sequence") {
  const PartitionSampler s(plancherel(3));
  Rng a(42), b(42);
  for (int k = 0; k < 50; ++k) CHECK(s.draw(a) == s.draw(b));
}

TEST_CASE("frequency of (2) under the theta=2 Plancherel measure on Y_2") {
  const PartitionSampler s(plancherel(2));
  Rng rng(2024);
  long hits = 0;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) hits += s.draw(rng) == Partition({2});
  CHECK(std::abs(static_cast<double>(hits) / draws - 2.0 / 3.0) < 0.01);
}

TEST_CASE("chi-square on Y_4") {
  const auto ys = enumerate_partitions(4);
  for (const auto& cfg : {plancherel(4), zmeasure(4, 3, Rational(2), 4)}) {
    const PartitionSampler s(cfg);
    const auto probs = fixed_size_probabilities(cfg, 4, ys);
    const auto chi = chi_square(histogram(s, ys, 100000, 77), probs);
    int support = 0;
    for (const auto& p : probs) support += sgn(p) > 0;
    CHECK(chi.degrees_of_freedom == support - 1);
    CHECK(chi.passed());
    if (cfg.family == SamplerConfig::Family::Plancherel) {
      CHECK(support == 5);
      CHECK(chi.critical == doctest::Approx(18.4668).epsilon(1e-4));
    }
  }
}

TEST_CASE("chi-square detects a wrong law and impossible cells") {
  const auto ys = enumerate_partitions(4);
  const PartitionSampler s(plancherel(4));
  const auto uniform = std::vector<Rational>(ys.size(), make_rational(1, 5));
  CHECK(!chi_square(histogram(s, ys, 20000, 5), uniform).passed());
  const auto impossible = chi_square({10, 1}, {Rational(1), Rational(0)});
  CHECK(!impossible.passed());
}

TEST_CASE("non-positive parameters are rejected") {
  CHECK_THROWS_AS(PartitionSampler(zmeasure(make_rational(1, 3), make_rational(5, 3), Rational(2), 3)), InvalidArgument);
  CHECK_THROWS_AS(PartitionSampler(zmeasure(4, make_rational(3, 2), Rational(2), 3)), InvalidArgument);
  CHECK_NOTHROW(PartitionSampler(zmeasure(GaussianRational(1, 1), GaussianRational(1, -1), Rational(2), 3)));
}

TEST_CASE("mixed sampler reports the tail mass exactly") {
  SamplerConfig c = zmeasure(4, 3, Rational(2), 0);
  c.mixing = make_rational(1, 16);
  c.max_size = 6;
  const PartitionSampler s(c);
  Rational head = 0;
  for (int n = 0; n <= 6; ++n) head += mixed_degree_mass(GaussianRational(6), make_rational(1, 16), n).re();
  REQUIRE(s.tail_mass_exact().has_value());
  CHECK(*s.tail_mass_exact() == 1 - pow(make_rational(15, 16), 6) * head);
  CHECK(s.tail_mass() > 0);
  Rng rng(3);
  for (int k = 0; k < 200; ++k) CHECK(s.draw(rng).size() <= 6);

  SamplerConfig pl = plancherel(0);
  pl.mixing = make_rational(1, 2);
  pl.max_size = 12;
  const PartitionSampler sp(pl);
  CHECK(!sp.tail_mass_exact().has_value());
  CHECK(sp.tail_mass() < 1e-10);
  CHECK(sp.tail_mass() >= -1e-15);
}
