#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jackpf/measures.hpp"
#include "jackpf/partition.hpp"
#include "jackpf/rational.hpp"

namespace jackpf {

using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Uniform draw k / 2^53 with k from the top 53 bits of one 64-bit output.
Rational uniform_dyadic(Rng& rng);

/// Inverse-CDF sampling over a finite list with exact nonnegative rational weights.
class DiscreteSampler {
 public:
  /// Throws InvalidArgument on a negative weight or a zero total.
  explicit DiscreteSampler(std::vector<Rational> weights);

  std::size_t draw(Rng& rng) const;
  std::size_t size() const { return cdf_.size(); }
  /// Normalized probability of item k.
  Rational probability(std::size_t k) const;

 private:
  std::vector<Rational> cdf_;  // normalized, last entry is 1
};

/// Which measure to sample from.
struct SamplerConfig {
  enum class Family { Plancherel, ZMeasure };
  Family family = Family::Plancherel;
  JackParams params;  // theta is used by both families
  /// Fixed size n; ignored when a mixing parameter is set.
  int n = 0;
  /// Mixing parameter: xi for z-measures, eta for Plancherel. Degrees above max_size are cut off.
  std::optional<Rational> mixing;
  int max_size = 10;
};

/// Exact probabilities of all partitions of n; throws InvalidArgument when a value is not a real number in [0, 1].
std::vector<Rational> fixed_size_probabilities(const SamplerConfig& cfg, int n, const std::vector<Partition>& ys);

class PartitionSampler {
 public:
  /// Rejects z-measure parameters outside the positive series with InvalidArgument.
  explicit PartitionSampler(SamplerConfig cfg);

  Partition draw(Rng& rng) const;

  bool mixed() const { return cfg_.mixing.has_value(); }
  /// Mass of degrees above max_size: exact when the prefactor is rational, nullopt otherwise.
  std::optional<Rational> tail_mass_exact() const { return tail_exact_; }
  double tail_mass() const { return tail_float_; }

 private:
  struct Level {
    std::vector<Partition> partitions;
    DiscreteSampler sampler;
  };

  SamplerConfig cfg_;
  std::vector<Level> levels_;
  std::optional<DiscreteSampler> degree_;
  std::optional<Rational> tail_exact_;
  double tail_float_ = 0.0;
};

/// Pearson statistic over cells with positive expected probability.
struct ChiSquare {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  /// 0.999 quantile of the chi-square law with degrees_of_freedom.
  double critical = 0.0;
  bool passed() const { return statistic < critical; }
};

ChiSquare chi_square(const std::vector<long>& counts, const std::vector<Rational>& probabilities, double level = 0.999);

}  // namespace jackpf
