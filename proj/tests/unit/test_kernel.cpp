#include <doctest.h>

#include <cmath>

#include "jackpf/error.hpp"
#include "jackpf/kernel.hpp"

using namespace jackpf;

namespace {

const Rational kEta = make_rational(1, 2);

std::vector<HalfInt> pts(std::initializer_list<int> twice) {
  std::vector<HalfInt> out;
  for (int t : twice) out.emplace_back(t);
  return out;
}

}  // namespace

TEST_CASE("windows") {
  CHECK(Window::radius(5).size() == 6);
  CHECK(Window::radius(1).points() == pts({-1, 1}));
  CHECK_THROWS_AS(Window::radius(4), InvalidArgument);
  CHECK_THROWS_AS(Window::radius(-1), InvalidArgument);
  CHECK(Window::from_points(pts({3, -1, 3})).points() == pts({-1, 3}));
  CHECK_THROWS_AS(Window::radius(3).index_of(HalfInt(5)), InvalidArgument);
  const auto s = HSpec::plancherel(kEta);
  CHECK_THROWS_AS(assemble_full_L(s, Window::radius(13)), CapExceeded);
  CHECK_NOTHROW(assemble_full_L(s, Window::radius(11)));
}

TEST_CASE("assembly examples") {
  const auto s = HSpec::z_theta2(4, 3, make_rational(1, 3));
  const auto j = assemble_J(Window::from_points(pts({1})), s.ring()).to_dense();
  CHECK(j(0, 1) == AlgebraicScalar::one(s.ring()));
  CHECK(j(1, 0) == -AlgebraicScalar::one(s.ring()));
  CHECK(j(0, 0).is_zero());

  const auto plus_only = assemble_full_L(s, Window::from_points(pts({1, 3, 5}))).to_dense();
  for (std::size_t a = 0; a < plus_only.size(); ++a) {
    for (std::size_t b = 0; b < plus_only.size(); ++b) CHECK(plus_only(a, b).is_zero());
  }

  const Window w = Window::from_points(pts({-3, -1, 1}));
  const auto l = assemble_full_L(s, w);
  const auto& labels = l.labels();
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) CHECK(l.at(a, b) == l_entry(s, labels[a], labels[b]));
  }
  CHECK(l.at(0, 2) == AlgebraicScalar::one(s.ring()));  // eps(-3/2, -1/2)
  CHECK(l.at(0, 4) == AlgebraicScalar::one(s.ring()));  // eps(-3/2, 1/2)
  CHECK(l.at(2, 4).is_zero());                          // eps(-1/2, 1/2)
}

TEST_CASE("Pf(J+L) examples") {
  const auto s = HSpec::plancherel(kEta);
  CHECK(pf_matrix_J_plus_L(s, Window::from_points(pts({1, 3}))) == AlgebraicScalar::one(s.ring()));
  CHECK(pf_matrix_J_plus_L(s, Window::from_points({})) == AlgebraicScalar::one(s.ring()));
  const Window w = Window::radius(5);
  CHECK(pf_matrix_J_plus_L(s, w) == pf_subset_expansion(s, w));
}

TEST_CASE("kernel examples") {
  const auto s = HSpec::plancherel(kEta);
  const auto k0 = kernel_K(s, Window::from_points(pts({1, 3, 5})));
  for (std::size_t a = 0; a < k0.matrix.dimension(); ++a) {
    for (std::size_t b = 0; b < k0.matrix.dimension(); ++b) CHECK(k0.matrix.at(a, b).is_zero());
  }
  const Window w = Window::radius(5);
  const auto k = kernel_K(s, w);
  CHECK(rho_pfaffian(k, {}) == AlgebraicScalar::one(s.ring()));
  CHECK(rho_bruteforce(s, w, {}) == AlgebraicScalar::one(s.ring()));
  CHECK(rho_pfaffian(k, pts({1})) == rho_bruteforce(s, w, pts({1})));
  CHECK(rho_pfaffian(k, pts({-3, 1})) == rho_bruteforce(s, w, pts({-3, 1})));
  CHECK(rho_pfaffian(k, pts({1, -3})) == rho_pfaffian(k, pts({-3, 1})));
  CHECK_THROWS_AS(rho_pfaffian(k, pts({1, 1})), InvalidArgument);
  CHECK_THROWS_AS(rho_pfaffian(k, pts({7})), InvalidArgument);
  const auto blk = k.block(HalfInt(1), HalfInt(1));
  CHECK(blk[0].is_zero());
  CHECK(blk[1] == rho_pfaffian(k, pts({1})));
}

TEST_CASE("finite-window identities for all kinds") {
  const std::vector<HSpec> specs = {HSpec::z_theta2(4, 3, make_rational(1, 16)),
                                    HSpec::z_half(GaussianRational(1, 1), GaussianRational(1, -1), make_rational(1, 3)),
                                    HSpec::plancherel(make_rational(1, 3))};
  for (const auto& s : specs) {
    for (int rt : {1, 3, 5, 7}) {
      const Window w = Window::radius(rt);
      const SubsetPfaffians brute(s, w);
      CHECK(pf_matrix_J_plus_L(s, w) == brute.total());
      const auto k = kernel_K(s, w);
      const auto& p = w.points();
      for (std::size_t a = 0; a < p.size(); ++a) {
        CHECK(rho_pfaffian(k, {p[a]}) == brute.rho({p[a]}));
        for (std::size_t b = a + 1; b < p.size(); ++b) CHECK(rho_pfaffian(k, {p[a], p[b]}) == brute.rho({p[a], p[b]}));
      }
      const auto inv = inverse_J_plus_L(s, w);
      auto jl = assemble_full_L(s, w).to_dense() + assemble_J(w, s.ring()).to_dense();
      CHECK(jl * inv == DenseMatrix<AlgebraicScalar>::identity(jl.size(), jl.fill()));
    }
  }
}

TEST_CASE("floating kernel on larger windows") {
  const std::vector<HSpec> specs = {HSpec::plancherel(kEta), HSpec::z_theta2(4, 3, make_rational(1, 16)),
                                    HSpec::z_half(GaussianRational(1, 1), GaussianRational(1, -1), make_rational(1, 3))};
  for (const auto& s : specs) {
    std::vector<std::vector<double>> rho;
    for (int rt : {5, 9, 13}) {
      const Window w = Window::radius(rt);
      const auto k = kernel_K_float(s, w);
      std::vector<double> row;
      for (int x : {-5, -3, -1, 1, 3, 5}) {
        const auto r = rho_float(k, w, {HalfInt(x)});
        CHECK(std::abs(r.imag()) <= 1e-12);
        CHECK(r.real() >= -1e-12);
        CHECK(r.real() <= 1 + 1e-12);
        row.push_back(r.real());
      }
      rho.push_back(row);
    }
    double d1 = 0, d2 = 0;
    for (std::size_t i = 0; i < rho[0].size(); ++i) {
      d1 = std::max(d1, std::abs(rho[1][i] - rho[0][i]));
      d2 = std::max(d2, std::abs(rho[2][i] - rho[1][i]));
    }
    MESSAGE(to_string(s.kind()) << ": max single-point change 5/2->9/2 " << d1 << ", 9/2->13/2 " << d2);
  }
  // the floating path matches the exact one where both run
  const auto s = HSpec::z_theta2(4, 3, make_rational(1, 3));
  const Window w = Window::radius(7);
  const auto kf = kernel_K_float(s, w);
  const auto k = kernel_K(s, w);
  for (HalfInt x : w.points()) {
    CHECK(std::abs(rho_float(kf, w, {x}) - to_float(rho_pfaffian(k, {x}))) <= 1e-12);
  }
}
