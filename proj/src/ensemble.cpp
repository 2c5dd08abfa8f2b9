#include "jackpf/ensemble.hpp"

#include <cstdint>
#include <unordered_map>

#include "jackpf/error.hpp"

namespace jackpf {

std::string to_string(HKind kind) {
  switch (kind) {
    case HKind::ZTheta2:
      return "z-theta2";
    case HKind::ZHalf:
      return "z-theta-half";
    case HKind::Plancherel:
      return "plancherel";
  }
  return "?";
}

HSpec::HSpec(HKind kind, GaussianRational z, GaussianRational zprime, Rational xi, Rational eta)
    : kind_(kind), z_(std::move(z)), zprime_(std::move(zprime)), xi_(std::move(xi)), eta_(std::move(eta)) {
  if (kind_ == HKind::Plancherel) {
    if (sgn(eta_) <= 0) throw InvalidArgument("eta must be positive");
    ring_ = QuarticRing::make(2 * eta_);
  } else {
    if (sgn(xi_) <= 0 || xi_ >= 1) throw InvalidArgument("xi must lie in (0, 1)");
    ring_ = QuarticRing::make(xi_);
  }
}

HSpec HSpec::z_theta2(GaussianRational z, GaussianRational zprime, const Rational& xi) {
  return HSpec(HKind::ZTheta2, std::move(z), std::move(zprime), xi, Rational(0));
}

HSpec HSpec::z_half(GaussianRational z, GaussianRational zprime, const Rational& xi) {
  return HSpec(HKind::ZHalf, std::move(z), std::move(zprime), xi, Rational(0));
}

HSpec HSpec::plancherel(const Rational& eta) { return HSpec(HKind::Plancherel, 0, 0, Rational(0), eta); }

Rational HSpec::theta() const { return kind_ == HKind::ZHalf ? Rational(1, 2) : Rational(2); }

JackParams HSpec::jack_params() const { return JackParams(z_, zprime_, theta()); }

Prefactor HSpec::normalizer() const {
  if (kind_ == HKind::Plancherel) return Prefactor::exp(GaussianRational(eta_));
  return mixed_prefactor(jack_params(), xi_).inverse();
}

SkewMatrix::SkewMatrix(RingPtr ring, std::vector<PointLabel> labels)
    : ring_(std::move(ring)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  upper_.assign(n * (n > 0 ? n - 1 : 0) / 2, AlgebraicScalar::zero(ring_));
}

std::size_t SkewMatrix::slot(std::size_t i, std::size_t j) const {
  // row-major strict upper triangle
  const std::size_t n = labels_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

AlgebraicScalar SkewMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return AlgebraicScalar::zero(ring_);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

void SkewMatrix::set(std::size_t i, std::size_t j, AlgebraicScalar value) {
  if (i == j) throw InvalidArgument("the diagonal of a skew matrix is zero");
  if (i < j) {
    upper_[slot(i, j)] = std::move(value);
  } else {
    upper_[slot(j, i)] = -value;
  }
}

DenseMatrix<AlgebraicScalar> SkewMatrix::to_dense() const {
  const std::size_t n = dimension();
  DenseMatrix<AlgebraicScalar> d(n, AlgebraicScalar::zero(ring_));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& v = upper_[slot(i, j)];
      d(i, j) = v;
      d(j, i) = -v;
    }
  }
  return d;
}

SkewMatrix SkewMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  std::vector<PointLabel> labels;
  labels.reserve(indices.size());
  for (auto k : indices) labels.push_back(labels_.at(k));
  SkewMatrix s(ring_, std::move(labels));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) s.set(a, b, at(indices[a], indices[b]));
  }
  return s;
}

std::vector<PointLabel> interleaved_labels(const std::vector<HalfInt>& points) {
  std::vector<PointLabel> labels;
  labels.reserve(2 * points.size());
  for (HalfInt p : points) {
    labels.push_back({p, Copy::Prime});
    labels.push_back({p, Copy::DoublePrime});
  }
  return labels;
}

AlgebraicScalar h_eval(const HSpec& spec, HalfInt x) {
  const int n = x.offset();
  const int abs_twice = x.twice() < 0 ? -x.twice() : x.twice();
  // xi^{|x|/2} = s^{2|x|} and (2 eta)^{|x|/2} likewise
  AlgebraicScalar power = quarter_power(spec.ring(), abs_twice);
  GaussianRational coeff(1);
  const GaussianRational one(1), two(2);
  switch (spec.kind()) {
    case HKind::ZTheta2:
      coeff = x.negative() ? bracket(-spec.z(), n) * bracket(-spec.zprime(), n)
                           : bracket(spec.z() + one, n) * bracket(spec.zprime() + one, n);
      break;
    case HKind::ZHalf:
      coeff = x.negative() ? bracket(two * spec.z(), n) * bracket(two * spec.zprime(), n)
                           : bracket(-two * spec.z() + one, n) * bracket(-two * spec.zprime() + one, n);
      break;
    case HKind::Plancherel:
      break;
  }
  coeff /= GaussianRational(Rational(factorial(static_cast<unsigned long>(n))));
  power *= coeff;
  return power;
}

int epsilon(HalfInt x, HalfInt y) {
  if (x == y) return 0;
  if (y < x) return -epsilon(y, x);
  return parity(x) == Parity::Odd && parity(y) == Parity::Even ? 1 : 0;
}

AlgebraicScalar l_entry(const HSpec& spec, const PointLabel& a, const PointLabel& b) {
  const HalfInt x = a.point, y = b.point;
  if (x == y) return AlgebraicScalar::zero(spec.ring());
  if (y < x) return -l_entry(spec, b, a);

  const AlgebraicScalar zero = AlgebraicScalar::zero(spec.ring());
  if (!x.negative()) return zero;  // L_{0+}, L_{++} and L_{00} vanish

  const bool pp = a.copy == Copy::Prime && b.copy == Copy::Prime;
  const bool dd = a.copy == Copy::DoublePrime && b.copy == Copy::DoublePrime;
  const bool dp = a.copy == Copy::DoublePrime && b.copy == Copy::Prime;
  auto cauchy = [&](HalfInt u) {
    // h(x) h(u) / (x - u)
    AlgebraicScalar v = h_eval(spec, x) * h_eval(spec, u);
    v *= GaussianRational(Rational(2, 1) / (x.twice() - u.twice()));
    return v;
  };

  if (y.negative()) {  // E block
    return pp ? AlgebraicScalar(spec.ring(), GaussianRational(epsilon(x, y))) : zero;
  }
  if (y.twice() == 1) {  // A block
    if (pp) return AlgebraicScalar(spec.ring(), GaussianRational(epsilon(x, y)));
    if (dd) return cauchy(y);
    return zero;
  }
  // B block
  if (dp) return cauchy(y);
  if (dd) return cauchy(HalfInt(y.twice() - 2));
  return zero;
}

SkewMatrix l_submatrix(const HSpec& spec, const SplitConfig& x) {
  x.validate();
  SkewMatrix m(spec.ring(), interleaved_labels(x.points()));
  const auto& labels = m.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) m.set(i, j, l_entry(spec, labels[i], labels[j]));
  }
  return m;
}

namespace {

class ExpansionPfaffian {
 public:
  explicit ExpansionPfaffian(const SkewMatrix& m) : m_(m), dense_(m.to_dense()) {}

  AlgebraicScalar eval(std::uint32_t mask) {
    if (mask == 0) return AlgebraicScalar::one(m_.ring());
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << first);
    AlgebraicScalar total = AlgebraicScalar::zero(m_.ring());
    int position = 0;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = __builtin_ctz(r);
      ++position;
      const auto& entry = dense_(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
      if (entry.is_zero()) continue;
      AlgebraicScalar sub = eval(rest & ~(1u << j));
      if (sub.is_zero()) continue;
      sub *= entry;
      if (position % 2 == 1) {
        total += sub;
      } else {
        total -= sub;
      }
    }
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const SkewMatrix& m_;
  DenseMatrix<AlgebraicScalar> dense_;
  std::unordered_map<std::uint32_t, AlgebraicScalar> memo_;
};

}  // namespace

AlgebraicScalar pfaffian_expansion(const SkewMatrix& m) {
  const std::size_t n = m.dimension();
  if (n % 2 != 0) throw InvalidArgument("Pfaffian of an odd-dimensional matrix");
  if (n > 24) throw CapExceeded("Pfaffian expansion is limited to dimension 24");
  ExpansionPfaffian e(m);
  return e.eval(n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

AlgebraicScalar pfaffian(const SkewMatrix& m) {
  if (m.dimension() % 2 != 0) throw InvalidArgument("Pfaffian of an odd-dimensional matrix");
  if (m.dimension() <= 12) return pfaffian_expansion(m);
  return pfaffian_elimination(m.to_dense());
}

AlgebraicScalar pf_closed_form(const HSpec& spec, const SplitConfig& x) {
  x.validate();
  if (!is_confL(x)) return AlgebraicScalar::zero(spec.ring());
  const DoubledConfig d = double_config(x);
  Rational c = vandermonde(d.minus) * vandermonde(d.plus) / cross_product(d.plus, d.minus);
  AlgebraicScalar v(spec.ring(), GaussianRational(c));
  for (HalfInt p : d.minus) v *= h_eval(spec, p);
  for (HalfInt p : d.plus) v *= h_eval(spec, p);
  return v;
}

TaggedScalar prob_L(const HSpec& spec, const SplitConfig& x) {
  return {spec.normalizer().inverse(), pfaffian(l_submatrix(spec, x))};
}

std::vector<AlgebraicScalar> pf_J_plus_L_by_degree(const HSpec& spec, int max_size) {
  if (max_size < 0) throw InvalidArgument("max_size must be nonnegative");
  if (max_size > kMaxPartialSize) {
    throw CapExceeded("Pf(J+L) partial sums are limited to max_size <= " + std::to_string(kMaxPartialSize));
  }
  std::vector<AlgebraicScalar> out;
  for (int n = 0; n <= max_size; ++n) {
    AlgebraicScalar level = AlgebraicScalar::zero(spec.ring());
    for (const auto& lambda : enumerate_partitions(n)) {
      level += pfaffian(l_submatrix(spec, embed(lambda, spec.embed_mode())));
    }
    out.push_back(std::move(level));
  }
  return out;
}

AlgebraicScalar pf_J_plus_L_partial(const HSpec& spec, int max_size) {
  AlgebraicScalar total = AlgebraicScalar::zero(spec.ring());
  for (const auto& level : pf_J_plus_L_by_degree(spec, max_size)) total += level;
  return total;
}

AlgebraicScalar degree_mass(const HSpec& spec, int n) {
  if (spec.kind() == HKind::Plancherel) {
    return AlgebraicScalar(spec.ring(), GaussianRational(poisson_degree_mass(spec.eta(), n)));
  }
  return AlgebraicScalar(spec.ring(), mixed_degree_mass(spec.jack_params().t(), spec.xi(), n));
}

}  // namespace jackpf
