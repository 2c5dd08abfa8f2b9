#pragma once

#include <string>
#include <vector>

#include "jackpf/lattice.hpp"
#include "jackpf/linalg.hpp"
#include "jackpf/measures.hpp"
#include "jackpf/scalar.hpp"
#include "jackpf/tagged.hpp"

namespace jackpf {

enum class HKind { ZTheta2, ZHalf, Plancherel };

std::string to_string(HKind kind);

/// Which weight function h defines the L-matrix, together with its parameters.
///
/// z-kinds work in the ring of base xi, the Plancherel kind in the ring of base 2 eta.
class HSpec {
 public:
  /// Throws InvalidArgument unless 0 < xi < 1.
  static HSpec z_theta2(GaussianRational z, GaussianRational zprime, const Rational& xi);
  static HSpec z_half(GaussianRational z, GaussianRational zprime, const Rational& xi);
  /// Throws InvalidArgument unless eta > 0.
  static HSpec plancherel(const Rational& eta);

  HKind kind() const { return kind_; }
  const GaussianRational& z() const { return z_; }
  const GaussianRational& zprime() const { return zprime_; }
  const Rational& xi() const { return xi_; }
  const Rational& eta() const { return eta_; }
  const RingPtr& ring() const { return ring_; }
  bool is_z_measure() const { return kind_ != HKind::Plancherel; }

  /// theta = 2 for ZTheta2, 1/2 for ZHalf; Plancherel defaults to 2.
  Rational theta() const;
  JackParams jack_params() const;
  /// Embedding used to identify configurations with diagrams.
  EmbedMode embed_mode() const { return kind_ == HKind::ZHalf ? EmbedMode::ThetaHalf : EmbedMode::Theta2; }

  /// Closed form of Pf(J + L): (1-xi)^{-zz'/2}, (1-xi)^{-2zz'} or e^{eta}.
  Prefactor normalizer() const;

 private:
  HSpec(HKind kind, GaussianRational z, GaussianRational zprime, Rational xi, Rational eta);

  HKind kind_;
  GaussianRational z_, zprime_;
  Rational xi_{0}, eta_{0};
  RingPtr ring_;
};

enum class Copy { Prime, DoublePrime };

/// Row/column label of the 2x2-block matrices: the copy x' or x'' of a point.
struct PointLabel {
  HalfInt point;
  Copy copy = Copy::Prime;

  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

/// Dense skew-symmetric matrix over one quartic ring. Only the strict upper
/// triangle is stored; the lower triangle and the zero diagonal are derived.
class SkewMatrix {
 public:
  SkewMatrix(RingPtr ring, std::vector<PointLabel> labels);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<PointLabel>& labels() const { return labels_; }
  const RingPtr& ring() const { return ring_; }

  AlgebraicScalar at(std::size_t i, std::size_t j) const;
  /// Sets entry (i, j), and thereby (j, i) = -value. Throws InvalidArgument for i == j.
  void set(std::size_t i, std::size_t j, AlgebraicScalar value);

  DenseMatrix<AlgebraicScalar> to_dense() const;
  SkewMatrix submatrix(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  RingPtr ring_;
  std::vector<PointLabel> labels_;
  std::vector<AlgebraicScalar> upper_;
};

/// Labels (x_1', x_1'', x_2', x_2'', ...) for points in the given order.
std::vector<PointLabel> interleaved_labels(const std::vector<HalfInt>& points);

AlgebraicScalar h_eval(const HSpec& spec, HalfInt x);

/// For x < y: 1 if x is odd and y is even, else 0; antisymmetric.
int epsilon(HalfInt x, HalfInt y);

/// Entry L(a, b) of the L-matrix built from the E, A and B blocks. The B-block
/// doubleprime column uses h(x) h(y-1) / (x - y + 1).
AlgebraicScalar l_entry(const HSpec& spec, const PointLabel& a, const PointLabel& b);

/// L(X|X) with labels interleaved in increasing point order.
SkewMatrix l_submatrix(const HSpec& spec, const SplitConfig& x);

/// Laplace-type expansion along the first row (memoized over index subsets);
/// intended for dimension <= 20.
AlgebraicScalar pfaffian_expansion(const SkewMatrix& m);
/// Expansion up to dimension 12, skew elimination above. Throws InvalidArgument for odd dimension.
AlgebraicScalar pfaffian(const SkewMatrix& m);

/// V(X~_-) V(X~_+) / prod(X~_+; X~_-) * h(X~) on Conf^L, zero elsewhere.
AlgebraicScalar pf_closed_form(const HSpec& spec, const SplitConfig& x);

/// Pf L(X|X) / Pf(J+L), with Pf(J+L) replaced by its closed form carried as the prefactor.
TaggedScalar prob_L(const HSpec& spec, const SplitConfig& x);

inline constexpr int kMaxPartialSize = 14;

/// Pf L(X|X) summed over the configurations of all diagrams of size n, for n = 0..max_size.
/// Every configuration outside the embedding image has a vanishing Pfaffian.
std::vector<AlgebraicScalar> pf_J_plus_L_by_degree(const HSpec& spec, int max_size);
/// Sum of pf_J_plus_L_by_degree; throws CapExceeded when max_size > 14.
AlgebraicScalar pf_J_plus_L_partial(const HSpec& spec, int max_size);

/// Closed-form mass of level n, without the prefactor: (t)_n xi^n / n! or eta^n / n!.
AlgebraicScalar degree_mass(const HSpec& spec, int n);

}  // namespace jackpf
