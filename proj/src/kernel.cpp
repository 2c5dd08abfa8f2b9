#include "jackpf/kernel.hpp"

#include <algorithm>

#include "jackpf/error.hpp"

namespace jackpf {

Window Window::radius(int radius_twice) {
  if (radius_twice <= 0 || radius_twice % 2 == 0) {
    throw InvalidArgument("window radius must be a positive half-integer (odd 2r)");
  }
  Window w;
  for (int t = -radius_twice; t <= radius_twice; t += 2) w.points_.emplace_back(t);
  return w;
}

Window Window::from_points(std::vector<HalfInt> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Window w;
  w.points_ = std::move(points);
  return w;
}

std::size_t Window::index_of(HalfInt x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) throw InvalidArgument("point " + to_string(x) + " is outside the window");
  return static_cast<std::size_t>(it - points_.begin());
}

namespace {

void check_exact_size(const Window& w) {
  if (w.size() > kMaxExactWindow) {
    throw CapExceeded("exact window computations are limited to " + std::to_string(kMaxExactWindow) + " points");
  }
}

SkewMatrix assemble_L_unchecked(const HSpec& spec, const Window& w) {
  SkewMatrix m(spec.ring(), interleaved_labels(w.points()));
  const auto& labels = m.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) m.set(i, j, l_entry(spec, labels[i], labels[j]));
  }
  return m;
}

DenseMatrix<AlgebraicScalar> j_plus_l(const HSpec& spec, const Window& w) {
  auto m = assemble_full_L(spec, w).to_dense();
  const auto one = AlgebraicScalar::one(spec.ring());
  for (std::size_t i = 0; i < m.size(); i += 2) {
    m(i, i + 1) += one;
    m(i + 1, i) -= one;
  }
  return m;
}

std::vector<std::size_t> label_indices(const Window& w, const std::vector<HalfInt>& x) {
  std::vector<HalfInt> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("correlation point set has a repeated point");
  }
  std::vector<std::size_t> idx;
  for (HalfInt p : sorted) {
    const std::size_t k = w.index_of(p);
    idx.push_back(2 * k);
    idx.push_back(2 * k + 1);
  }
  return idx;
}

}  // namespace

SkewMatrix assemble_full_L(const HSpec& spec, const Window& w) {
  check_exact_size(w);
  return assemble_L_unchecked(spec, w);
}

SkewMatrix assemble_J(const Window& w, const RingPtr& ring) {
  SkewMatrix j(ring, interleaved_labels(w.points()));
  for (std::size_t i = 0; i < j.dimension(); i += 2) j.set(i, i + 1, AlgebraicScalar::one(ring));
  return j;
}

AlgebraicScalar pf_matrix_J_plus_L(const HSpec& spec, const Window& w) {
  return pfaffian_elimination(j_plus_l(spec, w));
}

AlgebraicScalar pf_subset_expansion(const HSpec& spec, const Window& w) { return SubsetPfaffians(spec, w).total(); }

DenseMatrix<AlgebraicScalar> inverse_J_plus_L(const HSpec& spec, const Window& w) {
  return inverse(j_plus_l(spec, w));
}

std::array<AlgebraicScalar, 4> KernelMatrix::block(HalfInt x, HalfInt y) const {
  const std::size_t i = 2 * window.index_of(x), j = 2 * window.index_of(y);
  return {matrix.at(i, j), matrix.at(i, j + 1), matrix.at(i + 1, j), matrix.at(i + 1, j + 1)};
}

KernelMatrix kernel_K(const HSpec& spec, const Window& w) {
  const auto inv = inverse_J_plus_L(spec, w);
  SkewMatrix k(spec.ring(), interleaved_labels(w.points()));
  const auto one = AlgebraicScalar::one(spec.ring());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      AlgebraicScalar v = inv(i, j);
      if (i % 2 == 0 && j == i + 1) v += one;
      k.set(i, j, std::move(v));
    }
  }
  return {w, std::move(k)};
}

AlgebraicScalar rho_pfaffian(const KernelMatrix& k, const std::vector<HalfInt>& x) {
  return pfaffian(k.matrix.submatrix(label_indices(k.window, x)));
}

SubsetPfaffians::SubsetPfaffians(const HSpec& spec, const Window& w)
    : window_(w), total_(AlgebraicScalar::zero(spec.ring())) {
  if (w.size() > 16) throw CapExceeded("exhaustive subset expansion is limited to 16 points");
  const SkewMatrix full = assemble_L_unchecked(spec, w);
  const std::size_t count = std::size_t{1} << w.size();
  pf_.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (mask & (std::size_t{1} << k)) {
        idx.push_back(2 * k);
        idx.push_back(2 * k + 1);
      }
    }
    pf_.push_back(pfaffian(full.submatrix(idx)));
    total_ += pf_.back();
  }
}

AlgebraicScalar SubsetPfaffians::rho(const std::vector<HalfInt>& x) const {
  std::size_t want = 0;
  for (HalfInt p : x) want |= std::size_t{1} << window_.index_of(p);
  AlgebraicScalar acc = AlgebraicScalar::zero(total_.ring());
  for (std::size_t mask = 0; mask < pf_.size(); ++mask) {
    if ((mask & want) == want) acc += pf_[mask];
  }
  return acc / total_;
}

AlgebraicScalar rho_bruteforce(const HSpec& spec, const Window& w, const std::vector<HalfInt>& x) {
  check_exact_size(w);
  return SubsetPfaffians(spec, w).rho(x);
}

DenseMatrix<std::complex<double>> kernel_K_float(const HSpec& spec, const Window& w) {
  if (w.size() > kMaxFloatWindow) throw CapExceeded("floating window too large");
  const SkewMatrix l = assemble_L_unchecked(spec, w);
  const std::size_t n = l.dimension();
  DenseMatrix<std::complex<double>> jl(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::complex<double> v = to_float(l.at(i, j));
      if (i % 2 == 0 && j == i + 1) v += 1.0;
      jl(i, j) = v;
      jl(j, i) = -v;
    }
  }
  auto k = inverse(jl);
  for (std::size_t i = 0; i < n; i += 2) {
    k(i, i + 1) += 1.0;
    k(i + 1, i) -= 1.0;
  }
  return k;
}

std::complex<double> rho_float(const DenseMatrix<std::complex<double>>& k, const Window& w,
                               const std::vector<HalfInt>& x) {
  const auto idx = label_indices(w, x);
  DenseMatrix<std::complex<double>> sub(idx.size(), 0.0);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = a == b ? 0.0 : k(idx[a], idx[b]);
  }
  return pfaffian_elimination(sub);
}

}  // namespace jackpf
