#pragma once

#include <array>
#include <complex>
#include <vector>

#include "jackpf/ensemble.hpp"
#include "jackpf/lattice.hpp"
#include "jackpf/linalg.hpp"

namespace jackpf {

/// Finite window of the lattice: all x with |x| <= radius, or an explicit point set.
class Window {
 public:
  Window() = default;
  /// radius = radius_twice / 2; radius_twice must be odd and positive.
  static Window radius(int radius_twice);
  static Window from_points(std::vector<HalfInt> points);

  const std::vector<HalfInt>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Position of x in points(); throws InvalidArgument when x is outside the window.
  std::size_t index_of(HalfInt x) const;

 private:
  std::vector<HalfInt> points_;
};

inline constexpr std::size_t kMaxExactWindow = 12;
inline constexpr std::size_t kMaxFloatWindow = 256;

/// L restricted to the window, labels interleaved. Throws CapExceeded beyond 12 points.
SkewMatrix assemble_full_L(const HSpec& spec, const Window& w);
/// Block diagonal J with [[0,1],[-1,0]] blocks.
SkewMatrix assemble_J(const Window& w, const RingPtr& ring);

/// Pf(J + L) of the window matrices.
AlgebraicScalar pf_matrix_J_plus_L(const HSpec& spec, const Window& w);
/// Sum of Pf L(X|X) over all subsets X of the window (exhaustive, for the cross-check).
AlgebraicScalar pf_subset_expansion(const HSpec& spec, const Window& w);

/// (J + L)^{-1}; throws SingularMatrix.
DenseMatrix<AlgebraicScalar> inverse_J_plus_L(const HSpec& spec, const Window& w);

/// K = J + (J + L)^{-1} on the window.
struct KernelMatrix {
  Window window;
  SkewMatrix matrix;

  /// The 2x2 block K(x, y) in the order (x'y', x'y'', x''y', x''y'').
  std::array<AlgebraicScalar, 4> block(HalfInt x, HalfInt y) const;
};

KernelMatrix kernel_K(const HSpec& spec, const Window& w);

/// rho(X) = Pf[K(x_i, x_j)]
AlgebraicScalar rho_pfaffian(const KernelMatrix& k, const std::vector<HalfInt>& x);

/// rho(X) as the sum of Prob(Y) over window subsets Y containing X.
AlgebraicScalar rho_bruteforce(const HSpec& spec, const Window& w, const std::vector<HalfInt>& x);

/// Every subset Pfaffian of one window, computed once, for repeated brute-force queries.
class SubsetPfaffians {
 public:
  SubsetPfaffians(const HSpec& spec, const Window& w);

  const AlgebraicScalar& total() const { return total_; }
  AlgebraicScalar rho(const std::vector<HalfInt>& x) const;

 private:
  Window window_;
  std::vector<AlgebraicScalar> pf_;
  AlgebraicScalar total_;
};

/// Binary64 kernel for larger windows: entries assembled exactly, then evaluated and inverted in floating point.
DenseMatrix<std::complex<double>> kernel_K_float(const HSpec& spec, const Window& w);
std::complex<double> rho_float(const DenseMatrix<std::complex<double>>& k, const Window& w,
                               const std::vector<HalfInt>& x);

}  // namespace jackpf
