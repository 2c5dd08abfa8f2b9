#include "jackpf/lattice.hpp"

#include <algorithm>

#include "jackpf/error.hpp"

namespace jackpf {

HalfInt::HalfInt(int twice) : twice_(twice) {
  if (twice % 2 == 0) throw InvalidArgument("half-integer needs an odd numerator, got " + std::to_string(twice));
}

Parity parity(HalfInt x) { return x.offset() % 2 == 0 ? Parity::Even : Parity::Odd; }

void SplitConfig::validate() const {
  for (std::size_t i = 0; i < minus.size(); ++i) {
    if (!minus[i].negative()) throw InvalidArgument("minus part holds a positive point");
    if (i > 0 && !(minus[i - 1] < minus[i])) throw InvalidArgument("minus part must be strictly increasing");
  }
  for (std::size_t i = 0; i < plus.size(); ++i) {
    if (plus[i].negative()) throw InvalidArgument("plus part holds a negative point");
    if (i > 0 && !(plus[i - 1] < plus[i])) throw InvalidArgument("plus part must be strictly increasing");
  }
}

std::vector<HalfInt> SplitConfig::points() const {
  std::vector<HalfInt> out = minus;
  out.insert(out.end(), plus.begin(), plus.end());
  return out;
}

SplitConfig SplitConfig::from_points(std::vector<HalfInt> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InvalidArgument("configuration has a repeated point");
  }
  SplitConfig x;
  for (HalfInt p : points) (p.negative() ? x.minus : x.plus).push_back(p);
  return x;
}

namespace {

SplitConfig embed_doubled(const Partition& mu_half) {
  const FrobeniusCoords f = to_frobenius(double_union(mu_half));
  SplitConfig x;
  for (int i = 0; i < f.diagonal(); i += 2) x.plus.emplace_back(2 * f.P[static_cast<std::size_t>(i)] + 1);
  for (int q : f.Q) x.minus.emplace_back(-2 * q - 1);
  std::sort(x.plus.begin(), x.plus.end());
  std::sort(x.minus.begin(), x.minus.end());
  return x;
}

}  // namespace

SplitConfig embed_theta2(const Partition& lambda) { return embed_doubled(lambda); }

SplitConfig embed_theta_half(const Partition& lambda) { return embed_doubled(conjugate(lambda)); }

SplitConfig embed(const Partition& lambda, EmbedMode mode) {
  return mode == EmbedMode::Theta2 ? embed_theta2(lambda) : embed_theta_half(lambda);
}

std::optional<Partition> inverse_embed(const SplitConfig& x, EmbedMode mode) {
  x.validate();
  if (!is_confL(x)) return std::nullopt;
  const DoubledConfig d = double_config(x);
  FrobeniusCoords f;
  for (auto it = d.plus.rbegin(); it != d.plus.rend(); ++it) f.P.push_back(it->offset());
  for (HalfInt m : d.minus) f.Q.push_back(m.offset());
  Partition mu;
  try {
    mu = from_frobenius(f);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  // mu must be of the form lambda u lambda
  const auto& rows = mu.parts();
  if (rows.size() % 2 != 0) return std::nullopt;
  std::vector<int> half;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    if (rows[i] != rows[i + 1]) return std::nullopt;
    half.push_back(rows[i]);
  }
  Partition lambda(std::move(half));
  if (mode == EmbedMode::ThetaHalf) lambda = conjugate(lambda);
  if (embed(lambda, mode) != x) return std::nullopt;
  return lambda;
}

DoubledConfig double_config(const SplitConfig& x) {
  DoubledConfig d;
  d.minus = x.minus;
  for (HalfInt p : x.plus) {
    if (p.twice() != 1) d.plus.emplace_back(p.twice() - 2);
    d.plus.push_back(p);
  }
  std::sort(d.plus.begin(), d.plus.end());
  return d;
}

bool is_confL(const SplitConfig& x) {
  const DoubledConfig d = double_config(x);
  if (std::adjacent_find(d.plus.begin(), d.plus.end()) != d.plus.end()) return false;
  if (d.minus.size() != d.plus.size()) return false;
  for (std::size_t i = 0; i < d.minus.size(); ++i) {
    const Parity want = (i + 1) % 2 == 1 ? Parity::Odd : Parity::Even;
    if (parity(d.minus[i]) != want) return false;
  }
  return true;
}

Rational vandermonde(const std::vector<HalfInt>& xs) {
  Rational r(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) r *= (xs[i].twice() - xs[j].twice()) / 2;
  }
  return r;
}

Rational cross_product(const std::vector<HalfInt>& a, const std::vector<HalfInt>& b) {
  Rational r(1);
  for (HalfInt x : a) {
    for (HalfInt y : b) r *= (x.twice() - y.twice()) / 2;
  }
  return r;
}

std::string to_string(HalfInt x) { return std::to_string(x.twice()) + "/2"; }

std::string to_string(const SplitConfig& x) {
  auto list = [](const std::vector<HalfInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
  };
  return "{minus=" + list(x.minus) + ", plus=" + list(x.plus) + "}";
}

}  // namespace jackpf
