#include "jackpf/sampler.hpp"

#include <algorithm>
#include <limits>
#include <boost/math/distributions/chi_squared.hpp>

#include "jackpf/error.hpp"

namespace jackpf {

Rational uniform_dyadic(Rng& rng) {
  const std::uint64_t k = rng() >> 11;
  Rational u(Integer(static_cast<unsigned long>(k)));
  mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), 53);
  return u;
}

DiscreteSampler::DiscreteSampler(std::vector<Rational> weights) {
  Rational total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw InvalidArgument("negative sampling weight");
    total += w;
  }
  if (sgn(total) == 0) throw InvalidArgument("sampling weights sum to zero");
  Rational acc = 0;
  cdf_.reserve(weights.size());
  for (const auto& w : weights) {
    acc += w;
    cdf_.push_back(acc / total);
  }
}

std::size_t DiscreteSampler::draw(Rng& rng) const {
  const Rational u = uniform_dyadic(rng);
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<std::size_t>(it - cdf_.begin());
}

Rational DiscreteSampler::probability(std::size_t k) const {
  return k == 0 ? cdf_[0] : Rational(cdf_[k] - cdf_[k - 1]);
}

std::vector<Rational> fixed_size_probabilities(const SamplerConfig& cfg, int n, const std::vector<Partition>& ys) {
  std::vector<Rational> out;
  out.reserve(ys.size());
  for (const auto& lambda : ys) {
    if (cfg.family == SamplerConfig::Family::Plancherel) {
      out.push_back(plancherel_n(lambda, cfg.params.theta));
      continue;
    }
    const GaussianRational v = z_measure_n(lambda, cfg.params);
    if (!v.is_real() || sgn(v.re()) < 0 || v.re() > 1) {
      throw InvalidArgument("z-measure value " + to_string(v) + " at " + to_string(lambda) + " (n=" +
                            std::to_string(n) + ") is not a probability");
    }
    out.push_back(v.re());
  }
  return out;
}

PartitionSampler::PartitionSampler(SamplerConfig cfg) : cfg_(std::move(cfg)) {
  const bool z = cfg_.family == SamplerConfig::Family::ZMeasure;
  if (z && !is_positive_series(classify_parameters(cfg_.params))) {
    throw InvalidArgument("z-measure parameters are outside the principal, complementary and degenerate series");
  }
  if (!cfg_.mixing) {
    if (cfg_.n < 0) throw InvalidArgument("n must be nonnegative");
    auto ys = enumerate_partitions(cfg_.n);
    DiscreteSampler s(fixed_size_probabilities(cfg_, cfg_.n, ys));
    levels_.push_back({std::move(ys), std::move(s)});
    return;
  }

  const Rational& m = *cfg_.mixing;
  if (z && (sgn(m) <= 0 || m >= 1)) throw InvalidArgument("xi must lie in (0, 1)");
  if (!z && sgn(m) <= 0) throw InvalidArgument("eta must be positive");
  if (cfg_.max_size < 0) throw InvalidArgument("max_size must be nonnegative");

  std::vector<Rational> masses;
  Rational head = 0;
  for (int n = 0; n <= cfg_.max_size; ++n) {
    Rational w;
    if (z) {
      const GaussianRational g = mixed_degree_mass(cfg_.params.t(), m, n);
      if (!g.is_real() || sgn(g.re()) < 0) throw InvalidArgument("degree mass is not a nonnegative real");
      w = g.re();
    } else {
      w = poisson_degree_mass(m, n);
    }
    head += w;
    masses.push_back(w);
    auto ys = enumerate_partitions(n);
    if (sgn(w) == 0) {
      levels_.push_back({ys, DiscreteSampler(std::vector<Rational>(ys.size(), Rational(1)))});
      continue;
    }
    DiscreteSampler s(fixed_size_probabilities(cfg_, n, ys));
    levels_.push_back({std::move(ys), std::move(s)});
  }
  degree_.emplace(masses);

  const Prefactor pre = z ? mixed_prefactor(cfg_.params, m) : Prefactor::exp(GaussianRational(-m));
  if (auto exact = pre.exact(); exact && exact->is_real()) {
    tail_exact_ = Rational(1 - exact->re() * head);
    tail_float_ = to_double(*tail_exact_);
  } else {
    tail_float_ = 1.0 - pre.to_float().real() * to_double(head);
  }
}

Partition PartitionSampler::draw(Rng& rng) const {
  const std::size_t level = degree_ ? degree_->draw(rng) : 0;
  const Level& l = levels_[level];
  return l.partitions[l.sampler.draw(rng)];
}

ChiSquare chi_square(const std::vector<long>& counts, const std::vector<Rational>& probabilities, double level) {
  if (counts.size() != probabilities.size()) throw InvalidArgument("counts and probabilities differ in length");
  long total = 0;
  for (long c : counts) total += c;
  ChiSquare out;
  int cells = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double p = to_double(probabilities[k]);
    if (p <= 0.0) {
      if (counts[k] > 0) out.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double expected = p * static_cast<double>(total);
    const double d = static_cast<double>(counts[k]) - expected;
    out.statistic += d * d / expected;
    ++cells;
  }
  out.degrees_of_freedom = std::max(cells - 1, 1);
  boost::math::chi_squared dist(out.degrees_of_freedom);
  out.critical = boost::math::quantile(dist, level);
  return out;
}

}  // namespace jackpf
