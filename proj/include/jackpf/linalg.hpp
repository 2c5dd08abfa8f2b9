#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "jackpf/error.hpp"
#include "jackpf/scalar.hpp"

namespace jackpf {

/// Per-scalar hooks used by the elimination routines. Exact scalars pivot on the
/// first nonzero entry; floating scalars pivot on the largest magnitude.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<AlgebraicScalar> {
  static AlgebraicScalar zero_like(const AlgebraicScalar& x) { return AlgebraicScalar::zero(x.ring()); }
  static AlgebraicScalar one_like(const AlgebraicScalar& x) { return AlgebraicScalar::one(x.ring()); }
  static bool is_zero(const AlgebraicScalar& x) { return x.is_zero(); }
  static double pivot_weight(const AlgebraicScalar& x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> zero_like(const std::complex<double>&) { return 0.0; }
  static std::complex<double> one_like(const std::complex<double>&) { return 1.0; }
  static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
  static double pivot_weight(const std::complex<double>& x) { return std::abs(x); }
};

/// Square dense matrix, row-major.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill), fill_(fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// The scalar used to fill new matrices (zero of the ring).
  const T& fill() const { return fill_; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  static DenseMatrix identity(std::size_t n, const T& prototype) {
    DenseMatrix m(n, ScalarTraits<T>::zero_like(prototype));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one_like(prototype);
    return m;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.n_, a.fill_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (ScalarTraits<T>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          if (!ScalarTraits<T>::is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!(a.data_[k] == b.data_[k])) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
  T fill_;
};

namespace detail {

template <class T>
std::size_t pick_pivot(const DenseMatrix<T>& m, std::size_t col, std::size_t from, bool by_row) {
  std::size_t best = m.size();
  double best_weight = 0.0;
  for (std::size_t r = from; r < m.size(); ++r) {
    const double w = ScalarTraits<T>::pivot_weight(by_row ? m(r, col) : m(col, r));
    if (w > best_weight) {
      best_weight = w;
      best = r;
    }
  }
  return best;
}

}  // namespace detail

template <class T>
T determinant(DenseMatrix<T> m) {
  const std::size_t n = m.size();
  T det = ScalarTraits<T>::one_like(m.fill());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = detail::pick_pivot(m, k, k, true);
    if (p == n) return ScalarTraits<T>::zero_like(m.fill());
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    const T pivot = m(k, k);
    det *= pivot;
    const T inv = ScalarTraits<T>::one_like(pivot) / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ScalarTraits<T>::is_zero(m(i, k))) continue;
      const T factor = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!ScalarTraits<T>::is_zero(m(k, j))) m(i, j) -= factor * m(k, j);
      }
    }
  }
  return det;
}

/// Gauss-Jordan inverse; throws SingularMatrix.
template <class T>
DenseMatrix<T> inverse(DenseMatrix<T> m) {
  const std::size_t n = m.size();
  DenseMatrix<T> inv = DenseMatrix<T>::identity(n, m.fill());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = detail::pick_pivot(m, k, k, true);
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != k) {
      m.swap_rows(p, k);
      inv.swap_rows(p, k);
    }
    const T pinv = ScalarTraits<T>::one_like(m(k, k)) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!ScalarTraits<T>::is_zero(m(k, j))) m(k, j) *= pinv;
      if (!ScalarTraits<T>::is_zero(inv(k, j))) inv(k, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || ScalarTraits<T>::is_zero(m(i, k))) continue;
      const T factor = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!ScalarTraits<T>::is_zero(m(k, j))) m(i, j) -= factor * m(k, j);
        if (!ScalarTraits<T>::is_zero(inv(k, j))) inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

/// Pfaffian of a skew-symmetric matrix by skew Gaussian elimination: pivot (k, k+1),
/// then update the trailing block by (v u^T - u v^T) / pivot, where u and v are rows k
/// and k+1. The input must be fully skew-symmetric.
template <class T>
T pfaffian_elimination(DenseMatrix<T> m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) throw InvalidArgument("Pfaffian of an odd-dimensional matrix");
  T pf = ScalarTraits<T>::one_like(m.fill());
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    const std::size_t p = detail::pick_pivot(m, k, k + 1, false);
    if (p == n) return ScalarTraits<T>::zero_like(m.fill());
    if (p != k + 1) {
      m.swap_rows(p, k + 1);
      m.swap_cols(p, k + 1);
      pf = -pf;
    }
    const T pivot = m(k, k + 1);
    pf *= pivot;
    const T inv = ScalarTraits<T>::one_like(pivot) / pivot;
    for (std::size_t i = k + 2; i < n; ++i) {
      const T& u_i = m(k, i);
      const T& v_i = m(k + 1, i);
      const bool u_zero = ScalarTraits<T>::is_zero(u_i);
      const bool v_zero = ScalarTraits<T>::is_zero(v_i);
      if (u_zero && v_zero) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const T& u_j = m(k, j);
        const T& v_j = m(k + 1, j);
        // m(i,j) += (v_i u_j - u_i v_j) / pivot
        const bool a = !v_zero && !ScalarTraits<T>::is_zero(u_j);
        const bool b = !u_zero && !ScalarTraits<T>::is_zero(v_j);
        if (a) m(i, j) += v_i * u_j * inv;
        if (b) m(i, j) -= u_i * v_j * inv;
        if (a || b) m(j, i) = -m(i, j);
      }
    }
  }
  return pf;
}

}  // namespace jackpf
