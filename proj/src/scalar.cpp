#include "jackpf/scalar.hpp"

#include <cmath>

#include "jackpf/error.hpp"

namespace jackpf {

QuarticRing::QuarticRing(const Rational& c) : base_(c) {
  if (exact_sqrt(base_, sqrt_)) {
    degree_ = exact_sqrt(sqrt_, fourth_) ? 1 : 2;
  }
  root_value_ = std::pow(to_double(base_), 0.25);
}

std::shared_ptr<const QuarticRing> QuarticRing::make(const Rational& c) {
  if (sgn(c) <= 0) throw InvalidArgument("quartic ring base must be positive, got " + to_string(c));
  return std::shared_ptr<const QuarticRing>(new QuarticRing(c));
}

AlgebraicScalar::AlgebraicScalar(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("algebraic scalar without a ring");
}

AlgebraicScalar::AlgebraicScalar(RingPtr ring, GaussianRational constant) : AlgebraicScalar(std::move(ring)) {
  coeffs_[0] = std::move(constant);
}

AlgebraicScalar::AlgebraicScalar(RingPtr ring, Coeffs coeffs) : AlgebraicScalar(std::move(ring)) {
  coeffs_ = std::move(coeffs);
}

AlgebraicScalar AlgebraicScalar::generator(RingPtr ring) {
  AlgebraicScalar s(std::move(ring));
  s.coeffs_[1] = GaussianRational(1);
  return s;
}

void AlgebraicScalar::check_same_ring(const AlgebraicScalar& o, const char* op) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw BaseMismatch(std::string("cannot ") + op + " scalars with bases " + to_string(ring_->base()) +
                       " and " + to_string(o.ring_->base()));
  }
}

AlgebraicScalar::Coeffs AlgebraicScalar::canonical() const {
  switch (ring_->degree()) {
    case 1: {
      // s = r
      const Rational& r = ring_->fourth_root();
      const Rational& r2 = ring_->square_root();
      GaussianRational v = coeffs_[0];
      if (!coeffs_[1].is_zero()) v += coeffs_[1] * GaussianRational(r);
      if (!coeffs_[2].is_zero()) v += coeffs_[2] * GaussianRational(r2);
      if (!coeffs_[3].is_zero()) v += coeffs_[3] * GaussianRational(r * r2);
      return {v, 0, 0, 0};
    }
    case 2: {
      // s^2 = r
      GaussianRational r(ring_->square_root());
      GaussianRational c0 = coeffs_[0];
      GaussianRational c1 = coeffs_[1];
      if (!coeffs_[2].is_zero()) c0 += coeffs_[2] * r;
      if (!coeffs_[3].is_zero()) c1 += coeffs_[3] * r;
      return {c0, c1, 0, 0};
    }
    default:
      return coeffs_;
  }
}

bool AlgebraicScalar::is_zero() const {
  if (ring_->degree() == 4) {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  for (const auto& c : canonical()) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool AlgebraicScalar::is_constant() const {
  auto c = canonical();
  return c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
}

bool AlgebraicScalar::is_real() const {
  for (const auto& c : canonical()) {
    if (!c.is_real()) return false;
  }
  return true;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero algebraic scalar");
  const auto c = canonical();
  switch (ring_->degree()) {
    case 1:
      return AlgebraicScalar(ring_, c[0].inverse());
    case 2: {
      // (p + q s)^{-1} = (p - q s) / (p^2 - r q^2)
      GaussianRational r(ring_->square_root());
      GaussianRational n = c[0] * c[0] - r * c[1] * c[1];
      GaussianRational ninv = n.inverse();
      return AlgebraicScalar(ring_, Coeffs{c[0] * ninv, -c[1] * ninv, 0, 0});
    }
    default: {
      // a = e(u) + s o(u) with u = s^2, u^2 = base.
      // a * (e - s o) = e^2 - u o^2 = b0 + b1 u, then multiply by (b0 - b1 u).
      GaussianRational cb(ring_->base());
      AlgebraicScalar conj1(ring_, Coeffs{c[0], -c[1], c[2], -c[3]});
      GaussianRational b0 = c[0] * c[0] + cb * c[2] * c[2] - GaussianRational(2) * cb * c[1] * c[3];
      GaussianRational b1 = GaussianRational(2) * c[0] * c[2] - c[1] * c[1] - cb * c[3] * c[3];
      GaussianRational n = b0 * b0 - cb * b1 * b1;
      AlgebraicScalar conj2(ring_, Coeffs{b0, 0, -b1, 0});
      AlgebraicScalar r = conj1 * conj2;
      r *= n.inverse();
      return r;
    }
  }
}

AlgebraicScalar AlgebraicScalar::conj() const {
  AlgebraicScalar r(ring_);
  for (std::size_t k = 0; k < 4; ++k) r.coeffs_[k] = coeffs_[k].conj();
  return r;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
  check_same_ring(o, "add");
  for (std::size_t k = 0; k < 4; ++k) {
    if (!o.coeffs_[k].is_zero()) coeffs_[k] += o.coeffs_[k];
  }
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
  check_same_ring(o, "subtract");
  for (std::size_t k = 0; k < 4; ++k) {
    if (!o.coeffs_[k].is_zero()) coeffs_[k] -= o.coeffs_[k];
  }
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
  check_same_ring(o, "multiply");
  std::array<GaussianRational, 7> prod;
  for (std::size_t i = 0; i < 4; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  GaussianRational cb(ring_->base());
  for (std::size_t k = 4; k < 7; ++k) {
    if (!prod[k].is_zero()) prod[k - 4] += prod[k] * cb;
  }
  for (std::size_t k = 0; k < 4; ++k) coeffs_[k] = std::move(prod[k]);
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) {
  check_same_ring(o, "divide");
  if (o.is_zero()) throw DivisionByZero("division by zero algebraic scalar");
  if (o.is_constant()) return *this *= o.constant_value().inverse();
  return *this *= o.inverse();
}

AlgebraicScalar& AlgebraicScalar::operator*=(const GaussianRational& k) {
  for (auto& c : coeffs_) {
    if (!c.is_zero()) c *= k;
  }
  return *this;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar r(ring_);
  for (std::size_t k = 0; k < 4; ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  a.check_same_ring(b, "compare");
  if (a.ring_->degree() == 4) return a.coeffs_ == b.coeffs_;
  return a.canonical() == b.canonical();
}

AlgebraicScalar quarter_power(const RingPtr& ring, long k) {
  long q = k >= 0 ? k / 4 : -((-k + 3) / 4);
  long r = k - 4 * q;
  AlgebraicScalar::Coeffs c;
  c[static_cast<std::size_t>(r)] = GaussianRational(pow(ring->base(), q));
  return AlgebraicScalar(ring, std::move(c));
}

AlgebraicScalar quarter_power(const Rational& c, long k) { return quarter_power(QuarticRing::make(c), k); }

double to_double(const Rational& q) { return q.get_d(); }

std::complex<double> to_float(const GaussianRational& g) { return {g.re().get_d(), g.im().get_d()}; }

std::complex<double> to_float(const AlgebraicScalar& a) {
  const double s = a.ring()->root_value();
  std::complex<double> acc = 0.0;
  double p = 1.0;
  for (const auto& c : a.coeffs()) {
    if (!c.is_zero()) acc += to_float(c) * p;
    p *= s;
  }
  return acc;
}

std::string to_string(const AlgebraicScalar& a) {
  static const char* const powers[] = {"", " s", " s^2", " s^3"};
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& c = a.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c.is_real() ? to_string(c) : "(" + to_string(c) + ")";
    out += powers[k];
  }
  if (out.empty()) out = "0/1";
  return out + "  [s^4 = " + to_string(a.base()) + "]";
}

}  // namespace jackpf
