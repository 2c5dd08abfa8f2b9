#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "jackpf/partition.hpp"
#include "jackpf/rational.hpp"

namespace jackpf {

/// Point x of Z + 1/2, stored as the odd integer 2x.
class HalfInt {
 public:
  HalfInt() : twice_(1) {}
  /// Throws InvalidArgument unless twice is odd.
  explicit HalfInt(int twice);
  static HalfInt from_twice(int twice) { return HalfInt(twice); }

  int twice() const { return twice_; }
  Rational value() const { return make_rational(twice_, 2); }
  bool negative() const { return twice_ < 0; }
  /// |x| - 1/2, a nonnegative integer.
  int offset() const { return (twice_ < 0 ? -twice_ : twice_) / 2; }

  friend bool operator==(HalfInt, HalfInt) = default;
  friend auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  int twice_;
};

enum class Parity { Even, Odd };

/// 1/2 and -1/2 are even, and parity alternates moving away from 0 on each ray.
Parity parity(HalfInt x);

/// Finite configuration X = X_- u X_+ with both parts sorted increasing.
struct SplitConfig {
  std::vector<HalfInt> minus;
  std::vector<HalfInt> plus;

  /// Throws InvalidArgument when a part is unsorted, has duplicates or points of the wrong sign.
  void validate() const;
  /// All points, increasing.
  std::vector<HalfInt> points() const;
  std::size_t size() const { return minus.size() + plus.size(); }
  static SplitConfig from_points(std::vector<HalfInt> points);

  friend bool operator==(const SplitConfig&, const SplitConfig&) = default;
};

/// The doubled configuration X~: X~_- = X_-, and each plus point x > 1/2 becomes (x-1, x).
struct DoubledConfig {
  std::vector<HalfInt> minus;
  std::vector<HalfInt> plus;

  friend bool operator==(const DoubledConfig&, const DoubledConfig&) = default;
};

enum class EmbedMode { Theta2, ThetaHalf };

/// Configuration of lambda built from the Frobenius coordinates (P|Q) of lambda u lambda:
/// X_- = {-Q_i - 1/2}, X_+ = {P_i + 1/2 : i odd} (this contains 1/2 exactly when D is odd).
SplitConfig embed_theta2(const Partition& lambda);
/// Same construction applied to lambda' u lambda'.
SplitConfig embed_theta_half(const Partition& lambda);
SplitConfig embed(const Partition& lambda, EmbedMode mode);

/// The unique lambda with embed(lambda) = X, if any.
std::optional<Partition> inverse_embed(const SplitConfig& x, EmbedMode mode);

DoubledConfig double_config(const SplitConfig& x);

/// X~_+ has distinct points, |X~_-| = |X~_+|, and the i-th point of X~_- has the parity of i.
bool is_confL(const SplitConfig& x);

/// prod_{i<j} (x_i - x_j) in the given order.
Rational vandermonde(const std::vector<HalfInt>& xs);
/// prod_{i,j} (a_i - b_j)
Rational cross_product(const std::vector<HalfInt>& a, const std::vector<HalfInt>& b);

std::string to_string(HalfInt x);
std::string to_string(const SplitConfig& x);

}  // namespace jackpf
