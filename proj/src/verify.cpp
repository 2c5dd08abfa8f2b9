#include "jackpf/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "jackpf/ensemble.hpp"
#include "jackpf/error.hpp"
#include "jackpf/kernel.hpp"
#include "jackpf/measures.hpp"
#include "jackpf/sampler.hpp"

namespace jackpf {

void CheckResult::expect(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) counterexample = describe();
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

const std::vector<ZPair>& z_grid() {
  static const std::vector<ZPair> grid = {
      {GaussianRational(4), GaussianRational(3), "z=4,z'=3"},
      {make_rational(1, 3), make_rational(5, 3), "z=1/3,z'=5/3"},
      {GaussianRational(1, 1), GaussianRational(1, -1), "z=1+i,z'=1-i"},
  };
  return grid;
}

namespace {

using Clock = std::chrono::steady_clock;

const Rational kHalf = make_rational(1, 2);

std::vector<Rational> xis() { return {make_rational(1, 16), make_rational(1, 3)}; }

std::string tagged_str(const TaggedScalar& t) { return t.prefactor.to_string() + " * " + to_string(t.value); }

/// Runs body(check) and fills in timing.
CheckResult timed(std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

std::string params_str(const ZPair& zp, const Rational& theta) {
  return zp.label + ",theta=" + to_string(theta);
}

// --- normalization -------------------------------------------------------

SuiteReport normalization(const VerifyOptions& o) {
  SuiteReport r{"normalization", {}};
  const std::vector<Rational> thetas = {kHalf, Rational(1), Rational(2), Rational(3)};

  r.checks.push_back(timed("z-measure sums to one on Y_n", [&](CheckResult& c) {
    for (const auto& theta : thetas) {
      for (const auto& zp : z_grid()) {
        const JackParams p(zp.z, zp.zprime, theta);
        for (int n = 0; n <= o.max_n; ++n) {
          if (pochhammer(p.t(), n).is_zero()) continue;
          GaussianRational sum;
          for (const auto& lambda : enumerate_partitions(n)) sum += z_measure_n(lambda, p);
          c.expect(sum.is_one(), [&] { return params_str(zp, theta) + ",n=" + std::to_string(n) + ": sum=" + to_string(sum); });
        }
      }
    }
  }));

  r.checks.push_back(timed("Plancherel measure sums to one on Y_n", [&](CheckResult& c) {
    for (const auto& theta : thetas) {
      for (int n = 0; n <= o.max_n; ++n) {
        Rational sum = 0;
        for (const auto& lambda : enumerate_partitions(n)) sum += plancherel_n(lambda, theta);
        c.expect(sum == 1, [&] { return "theta=" + to_string(theta) + ",n=" + std::to_string(n) + ": sum=" + to_string(sum); });
      }
    }
  }));

  r.checks.push_back(timed("mixed z-measure degree mass (1-xi)^t (t)_n xi^n/n!", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2)}) {
      for (const auto& zp : z_grid()) {
        const JackParams p(zp.z, zp.zprime, theta);
        for (const auto& xi : xis()) {
          const auto ring = QuarticRing::make(xi);
          for (int n = 0; n <= std::min(o.max_n, 8); ++n) {
            AlgebraicScalar sum = AlgebraicScalar::zero(ring);
            bool tags = true;
            for (const auto& lambda : enumerate_partitions(n)) {
              const auto m = mixed_z_measure(lambda, p, xi);
              tags = tags && m.prefactor == mixed_prefactor(p, xi);
              sum += m.value;
            }
            const AlgebraicScalar want(ring, mixed_degree_mass(p.t(), xi, n));
            c.expect(tags && sum == want, [&] {
              return params_str(zp, theta) + ",xi=" + to_string(xi) + ",n=" + std::to_string(n) + ": " + to_string(sum);
            });
          }
        }
      }
    }
  }));

  r.checks.push_back(timed("poissonized Plancherel degree mass eta^n/n!", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2)}) {
      for (const auto& eta : {kHalf, make_rational(1, 3)}) {
        const auto ring = QuarticRing::make(2 * eta);
        for (int n = 0; n <= o.max_n; ++n) {
          AlgebraicScalar sum = AlgebraicScalar::zero(ring);
          bool tags = true;
          for (const auto& lambda : enumerate_partitions(n)) {
            const auto m = poisson_plancherel(lambda, theta, eta);
            tags = tags && m.prefactor == Prefactor::exp(GaussianRational(-eta));
            sum += m.value;
          }
          c.expect(tags && sum == AlgebraicScalar(ring, poisson_degree_mass(eta, n)), [&] {
            return "theta=" + to_string(theta) + ",eta=" + to_string(eta) + ",n=" + std::to_string(n);
          });
        }
      }
    }
  }));
  return r;
}

// --- symmetry ------------------------------------------------------------

SuiteReport symmetry(const VerifyOptions& o) {
  SuiteReport r{"symmetry", {}};
  const std::vector<Rational> thetas = {kHalf, Rational(2)};
  const auto all = enumerate_partitions_up_to(o.max_n);

  r.checks.push_back(timed("conjugation M(lambda; z,z',theta) = M(lambda'; -z/theta,-z'/theta,1/theta)", [&](CheckResult& c) {
    for (const auto& theta : thetas) {
      for (const auto& zp : z_grid()) {
        const JackParams p(zp.z, zp.zprime, theta);
        const GaussianRational s = GaussianRational(Rational(-1 / theta));
        const JackParams q(zp.z * s, zp.zprime * s, Rational(1 / theta));
        for (const auto& lambda : all) {
          if (pochhammer(p.t(), lambda.size()).is_zero()) continue;
          const auto a = z_measure_n(lambda, p);
          const auto b = z_measure_n(conjugate(lambda), q);
          c.expect(a == b, [&] { return params_str(zp, theta) + ",lambda=" + to_string(lambda); });
        }
      }
    }
  }));

  r.checks.push_back(timed("H(lambda,theta) = theta^|lambda| H'(lambda',1/theta)", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(1), Rational(2), Rational(3)}) {
      for (const auto& lambda : all) {
        const Rational rhs = pow(theta, lambda.size()) * hook_Hprime(conjugate(lambda), Rational(1 / theta));
        c.expect(hook_H(lambda, theta) == rhs, [&] { return "theta=" + to_string(theta) + ",lambda=" + to_string(lambda); });
      }
    }
  }));

  r.checks.push_back(timed("(z)_lambda = (-theta)^|lambda| (-z/theta)_lambda' at 1/theta", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2), Rational(3)}) {
      for (const auto& zp : z_grid()) {
        const GaussianRational w = zp.z * GaussianRational(Rational(-1 / theta));
        for (const auto& lambda : all) {
          const GaussianRational lhs = gen_pochhammer(zp.z, lambda, theta);
          const GaussianRational rhs = GaussianRational(pow(Rational(-theta), lambda.size())) *
                                       gen_pochhammer(w, conjugate(lambda), Rational(1 / theta));
          c.expect(lhs == rhs, [&] { return params_str(zp, theta) + ",lambda=" + to_string(lambda); });
        }
      }
    }
  }));

  r.checks.push_back(timed("M(lambda; z,z',1/2,xi) = M(lambda'; -2z,-2z',2,xi)", [&](CheckResult& c) {
    for (const auto& zp : z_grid()) {
      const JackParams half(zp.z, zp.zprime, kHalf);
      const JackParams two(zp.z * GaussianRational(-2), zp.zprime * GaussianRational(-2), Rational(2));
      for (const auto& xi : xis()) {
        for (const auto& lambda : all) {
          const auto a = mixed_z_measure(lambda, half, xi);
          const auto b = mixed_z_measure(conjugate(lambda), two, xi);
          c.expect(a == b, [&] { return zp.label + ",xi=" + to_string(xi) + ",lambda=" + to_string(lambda); });
        }
      }
    }
  }));

  r.checks.push_back(timed("box and row forms of (z)_lambda agree", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(1), Rational(2), Rational(3)}) {
      for (const auto& zp : z_grid()) {
        for (const auto& lambda : enumerate_partitions_up_to(std::max(o.max_n, 10))) {
          c.expect(gen_pochhammer(zp.z, lambda, theta) == gen_pochhammer_rows(zp.z, lambda, theta),
                   [&] { return params_str(zp, theta) + ",lambda=" + to_string(lambda); });
        }
      }
    }
  }));

  r.checks.push_back(timed("Plancherel conjugation M(lambda,theta) = M(lambda',1/theta)", [&](CheckResult& c) {
    for (const auto& theta : thetas) {
      for (const auto& lambda : all) {
        c.expect(plancherel_n(lambda, theta) == plancherel_n(conjugate(lambda), Rational(1 / theta)),
                 [&] { return "theta=" + to_string(theta) + ",lambda=" + to_string(lambda); });
      }
    }
  }));
  return r;
}

// --- frobenius -----------------------------------------------------------

SuiteReport frobenius(const VerifyOptions& o) {
  SuiteReport r{"frobenius", {}};
  const auto all = enumerate_partitions_up_to(o.max_n);
  const int lattice_n = std::max(o.max_n, 10);

  r.checks.push_back(timed("Frobenius form of the poissonized Plancherel measure", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2)}) {
      for (const auto& eta : {kHalf, make_rational(1, 3)}) {
        for (const auto& lambda : all) {
          const auto a = frobenius_plancherel(lambda, eta, theta);
          const auto b = poisson_plancherel(lambda, theta, eta);
          c.expect(a == b, [&] {
            return "theta=" + to_string(theta) + ",lambda=" + to_string(lambda) + ": " + tagged_str(a) + " vs " + tagged_str(b);
          });
        }
      }
    }
  }));

  r.checks.push_back(timed("Frobenius form of the mixed z-measure", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2)}) {
      for (const auto& zp : z_grid()) {
        const JackParams p(zp.z, zp.zprime, theta);
        for (const auto& xi : xis()) {
          for (const auto& lambda : all) {
            const auto a = frobenius_z_measure(lambda, p, xi);
            const auto b = mixed_z_measure(lambda, p, xi);
            c.expect(a == b, [&] { return params_str(zp, theta) + ",xi=" + to_string(xi) + ",lambda=" + to_string(lambda); });
          }
        }
      }
    }
  }));

  r.checks.push_back(timed("Gamma-product forms of H and H' (relative 1e-9)", [&](CheckResult& c) {
    for (const auto& theta : {kHalf, Rational(2)}) {
      for (const auto& lambda : all) {
        const double h = to_double(hook_H(lambda, theta)), hp = to_double(hook_Hprime(lambda, theta));
        const double gh = hook_H_gamma(lambda, theta), ghp = hook_Hprime_gamma(lambda, theta);
        const bool ok = std::abs(gh - h) <= 1e-9 * std::abs(h) && std::abs(ghp - hp) <= 1e-9 * std::abs(hp);
        c.expect(ok, [&] { return "theta=" + to_string(theta) + ",lambda=" + to_string(lambda); });
      }
    }
  }));

  r.checks.push_back(timed("embeddings are injective and inverted on Conf^L", [&](CheckResult& c) {
    for (const auto mode : {EmbedMode::Theta2, EmbedMode::ThetaHalf}) {
      std::set<std::vector<int>> seen;
      for (const auto& lambda : enumerate_partitions_up_to(lattice_n)) {
        const SplitConfig x = embed(lambda, mode);
        std::vector<int> key;
        for (HalfInt p : x.points()) key.push_back(p.twice());
        const bool fresh = seen.insert(key).second;
        const auto back = inverse_embed(x, mode);
        c.expect(fresh && is_confL(x) && back && *back == lambda, [&] { return "lambda=" + to_string(lambda); });
      }
    }
  }));

  r.checks.push_back(timed("doubled plus part is {P_i + 1/2} of lambda u lambda", [&](CheckResult& c) {
    for (const auto& lambda : enumerate_partitions_up_to(lattice_n)) {
      const FrobeniusCoords f = to_frobenius(double_union(lambda));
      const DoubledConfig d = double_config(embed_theta2(lambda));
      std::vector<HalfInt> want;
      for (int p : f.P) want.emplace_back(2 * p + 1);
      std::sort(want.begin(), want.end());
      long lhs = 0, rhs = 0;
      for (HalfInt x : d.plus) lhs += (x.twice() - 1) / 2;
      for (HalfInt x : d.minus) lhs += (-x.twice() - 1) / 2;
      for (std::size_t i = 0; i < f.P.size(); ++i) rhs += f.P[i] + f.Q[i];
      c.expect(d.plus == want && lhs == rhs, [&] { return "lambda=" + to_string(lambda); });
    }
  }));
  return r;
}

// --- pfaffian ------------------------------------------------------------

std::vector<HSpec> spec_grid(bool all_pairs) {
  std::vector<HSpec> out;
  for (const auto& xi : xis()) {
    for (const auto& zp : z_grid()) {
      out.push_back(HSpec::z_theta2(zp.z, zp.zprime, xi));
      out.push_back(HSpec::z_half(zp.z, zp.zprime, xi));
      if (!all_pairs) break;
    }
  }
  out.push_back(HSpec::plancherel(kHalf));
  return out;
}

std::string spec_str(const HSpec& s) {
  if (s.kind() == HKind::Plancherel) return "plancherel,eta=" + to_string(s.eta());
  return to_string(s.kind()) + ",z=" + to_string(s.z()) + ",z'=" + to_string(s.zprime()) + ",xi=" + to_string(s.xi());
}

AlgebraicScalar random_scalar(const RingPtr& ring, Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), zero(0, 3);
  AlgebraicScalar::Coeffs c;
  for (auto& g : c) {
    if (zero(rng) == 0) continue;
    g = GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  }
  return AlgebraicScalar(ring, c);
}

SuiteReport pfaffian_suite(const VerifyOptions& o) {
  SuiteReport r{"pfaffian", {}};
  const auto all = enumerate_partitions_up_to(o.max_size);

  r.checks.push_back(timed("Pf L(X|X) equals the V V / prod * h closed form on embedded diagrams", [&](CheckResult& c) {
    for (const auto& spec : spec_grid(true)) {
      std::vector<EmbedMode> modes = {spec.embed_mode()};
      if (spec.kind() == HKind::Plancherel) modes.push_back(EmbedMode::ThetaHalf);
      for (const auto mode : modes) {
        for (const auto& lambda : all) {
          const SplitConfig x = embed(lambda, mode);
          const auto pf = pfaffian(l_submatrix(spec, x));
          const auto closed = pf_closed_form(spec, x);
          c.expect(pf == closed, [&] {
            return spec_str(spec) + ",lambda=" + to_string(lambda) + ": " + to_string(pf) + " vs " + to_string(closed);
          });
        }
      }
    }
  }));

  r.checks.push_back(timed("Pf L(X|X) vanishes off Conf^L", [&](CheckResult& c) {
    Rng rng(o.seed);
    std::uniform_int_distribution<int> pick(0, 15), count(1, 8);
    const std::vector<HSpec> specs = {HSpec::z_theta2(4, 3, make_rational(1, 3)),
                                      HSpec::z_half(make_rational(1, 3), make_rational(5, 3), make_rational(1, 16)),
                                      HSpec::plancherel(kHalf)};
    int done = 0;
    while (done < o.random_cases) {
      std::set<int> twice;
      const int k = count(rng);
      while (static_cast<int>(twice.size()) < k) twice.insert(2 * pick(rng) - 15);
      std::vector<HalfInt> pts;
      for (int t : twice) pts.emplace_back(t);
      const SplitConfig x = SplitConfig::from_points(pts);
      if (is_confL(x)) continue;
      const HSpec& spec = specs[static_cast<std::size_t>(done) % specs.size()];
      const auto pf = pfaffian(l_submatrix(spec, x));
      c.expect(pf.is_zero(), [&] { return spec_str(spec) + ",X=" + to_string(x) + ": " + to_string(pf); });
      ++done;
    }
  }));

  r.checks.push_back(timed("Pf(M)^2 = det(M) on random skew matrices", [&](CheckResult& c) {
    Rng rng(o.seed + 1);
    for (const auto& base : {make_rational(1, 3), make_rational(1, 16), Rational(2)}) {
      const auto ring = QuarticRing::make(base);
      for (int dim = 0; dim <= 10; dim += 2) {
        for (int rep = 0; rep < 4; ++rep) {
          std::vector<PointLabel> labels(static_cast<std::size_t>(dim));
          SkewMatrix m(ring, labels);
          for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) m.set(i, j, random_scalar(ring, rng));
          }
          const auto pf = pfaffian(m);
          const auto det = determinant(m.to_dense());
          c.expect(pf * pf == det, [&] { return "base=" + to_string(base) + ",dim=" + std::to_string(dim); });
          c.expect(pfaffian_expansion(m) == pfaffian_elimination(m.to_dense()),
                   [&] { return "expansion vs elimination, dim=" + std::to_string(dim); });
        }
      }
    }
  }));
  return r;
}

// --- theorems ------------------------------------------------------------

SuiteReport theorems(const VerifyOptions& o) {
  SuiteReport r{"theorems", {}};
  const auto all = enumerate_partitions_up_to(o.max_size);

  auto theorem = [&](const char* name, HKind kind) {
    r.checks.push_back(timed(name, [&](CheckResult& c) {
      for (const auto& xi : xis()) {
        for (const auto& zp : z_grid()) {
          const HSpec spec = kind == HKind::ZTheta2 ? HSpec::z_theta2(zp.z, zp.zprime, xi) : HSpec::z_half(zp.z, zp.zprime, xi);
          const JackParams p = spec.jack_params();
          for (const auto& lambda : all) {
            const auto prob = prob_L(spec, embed(lambda, spec.embed_mode()));
            const auto m = mixed_z_measure(lambda, p, xi);
            c.expect(prob == m, [&] {
              return spec_str(spec) + ",lambda=" + to_string(lambda) + ": " + tagged_str(prob) + " vs " + tagged_str(m);
            });
          }
        }
      }
    }));
  };
  theorem("Prob_L = mixed z-measure, theta=2", HKind::ZTheta2);
  theorem("Prob_L = mixed z-measure, theta=1/2", HKind::ZHalf);

  r.checks.push_back(timed("Prob_L = poissonized Plancherel measure, theta=2 and 1/2", [&](CheckResult& c) {
    for (const auto& eta : {kHalf, make_rational(1, 3)}) {
      const HSpec spec = HSpec::plancherel(eta);
      for (const auto& [mode, theta] : {std::pair{EmbedMode::Theta2, Rational(2)}, std::pair{EmbedMode::ThetaHalf, kHalf}}) {
        for (const auto& lambda : all) {
          const auto prob = prob_L(spec, embed(lambda, mode));
          const auto m = poisson_plancherel(lambda, theta, eta);
          c.expect(prob == m, [&] { return "eta=" + to_string(eta) + ",theta=" + to_string(theta) + ",lambda=" + to_string(lambda); });
        }
      }
    }
  }));

  r.checks.push_back(timed("Pf(J+L) normalizers (1-xi)^{-zz'/2}, (1-xi)^{-2zz'}, e^eta", [&](CheckResult& c) {
    for (const auto& xi : xis()) {
      for (const auto& zp : z_grid()) {
        const GaussianRational zz = zp.z * zp.zprime;
        const Prefactor a = HSpec::z_theta2(zp.z, zp.zprime, xi).normalizer();
        const Prefactor b = HSpec::z_half(zp.z, zp.zprime, xi).normalizer();
        c.expect(a == Prefactor::power(1 - xi, -zz * GaussianRational(kHalf)), [&] { return zp.label + ",theta=2: " + a.to_string(); });
        c.expect(b == Prefactor::power(1 - xi, -zz * GaussianRational(2)), [&] { return zp.label + ",theta=1/2: " + b.to_string(); });
      }
    }
    for (const auto& eta : {kHalf, make_rational(1, 3)}) {
      const Prefactor p = HSpec::plancherel(eta).normalizer();
      c.expect(p == Prefactor::exp(eta), [&] { return "eta=" + to_string(eta) + ": " + p.to_string(); });
    }
  }));

  r.checks.push_back(timed("per-degree sums of Pf L(X|X) equal (t)_n xi^n/n! and eta^n/n!", [&](CheckResult& c) {
    for (const auto& spec : spec_grid(true)) {
      const auto by_degree = pf_J_plus_L_by_degree(spec, o.max_size);
      AlgebraicScalar running = AlgebraicScalar::zero(spec.ring());
      for (int n = 0; n <= o.max_size; ++n) {
        const auto want = degree_mass(spec, n);
        running += want;
        c.expect(by_degree[static_cast<std::size_t>(n)] == want,
                 [&] { return spec_str(spec) + ",n=" + std::to_string(n) + ": " + to_string(by_degree[static_cast<std::size_t>(n)]); });
      }
      c.expect(pf_J_plus_L_partial(spec, o.max_size) == running, [&] { return spec_str(spec) + ": partial sum"; });
    }
  }));
  return r;
}

// --- kernel --------------------------------------------------------------

SuiteReport kernel_suite(const VerifyOptions& o) {
  SuiteReport r{"kernel", {}};
  struct Case {
    HSpec spec;
    int max_radius_twice;
  };
  const int cap = std::min<int>(o.max_window, static_cast<int>(kMaxExactWindow));
  const int largest = cap / 2 * 2 - 1;  // a window of radius r has 2r + 1 points
  const std::vector<Case> cases = {
      {HSpec::z_theta2(4, 3, make_rational(1, 16)), largest},
      {HSpec::z_half(make_rational(1, 3), make_rational(5, 3), make_rational(1, 16)), largest},
      {HSpec::plancherel(kHalf), largest},
      {HSpec::z_theta2(GaussianRational(1, 1), GaussianRational(1, -1), make_rational(1, 3)), std::min(largest, 5)},
      {HSpec::z_half(4, 3, make_rational(1, 3)), std::min(largest, 5)},
  };

  CheckResult expansion{"Pf(J+L) equals the subset expansion"};
  CheckResult identity{"(J+L)(J+L)^{-1} = I and K skew-symmetric"};
  CheckResult rho{"rho(X) = Pf K[X] equals sum over Y containing X of Prob(Y), |X| <= 2"};
  CheckResult unit{"single-point rho lies in [0,1] (floating, 1e-12)"};
  CheckResult floating{"floating kernel agrees with the exact kernel (1e-9)"};
  const auto start = Clock::now();

  for (const auto& cs : cases) {
    for (int rt = 1; rt <= cs.max_radius_twice; rt += 2) {
      const Window w = Window::radius(rt);
      const std::string where = spec_str(cs.spec) + ",radius=" + std::to_string(rt) + "/2";
      try {
        const SubsetPfaffians subsets(cs.spec, w);
        const auto pf = pf_matrix_J_plus_L(cs.spec, w);
        expansion.expect(pf == subsets.total(), [&] { return where + ": " + to_string(pf) + " vs " + to_string(subsets.total()); });

        const auto jl = [&] {
          auto m = assemble_full_L(cs.spec, w).to_dense();
          const auto j = assemble_J(w, cs.spec.ring()).to_dense();
          return m + j;
        }();
        const auto inv = inverse_J_plus_L(cs.spec, w);
        bool skew = true;
        for (std::size_t i = 0; i < inv.size(); ++i) {
          for (std::size_t j = 0; j < inv.size(); ++j) skew = skew && inv(i, j) == -inv(j, i);
        }
        identity.expect(skew && jl * inv == DenseMatrix<AlgebraicScalar>::identity(jl.size(), jl.fill()),
                        [&] { return where; });

        const KernelMatrix k = kernel_K(cs.spec, w);
        const auto kf = kernel_K_float(cs.spec, w);
        const auto& pts = w.points();
        std::vector<std::vector<HalfInt>> subsets_le2 = {{}};
        for (std::size_t a = 0; a < pts.size(); ++a) {
          subsets_le2.push_back({pts[a]});
          for (std::size_t b = a + 1; b < pts.size(); ++b) subsets_le2.push_back({pts[a], pts[b]});
        }
        const bool positive = cs.spec.kind() == HKind::Plancherel ||
                              is_positive_series(classify_parameters(cs.spec.jack_params()));
        for (const auto& x : subsets_le2) {
          const auto a = rho_pfaffian(k, x);
          const auto b = subsets.rho(x);
          rho.expect(a == b, [&] {
            std::string s = where + ",X={";
            for (HalfInt p : x) s += std::to_string(p.twice()) + " ";
            return s + "}: " + to_string(a) + " vs " + to_string(b);
          });
          const auto exact = to_float(a);
          const auto fl = rho_float(kf, w, x);
          floating.expect(std::abs(fl - exact) <= 1e-9 * std::max(1.0, std::abs(exact)), [&] { return where; });
          if (x.size() == 1 && positive) {
            unit.expect(std::abs(exact.imag()) <= 1e-12 && exact.real() >= -1e-12 && exact.real() <= 1 + 1e-12,
                        [&] { return where + ",x=" + to_string(x[0]); });
          }
        }
      } catch (const std::exception& e) {
        expansion.expect(false, [&] { return where + ": exception " + e.what(); });
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  for (auto* c : {&expansion, &identity, &rho, &unit, &floating}) {
    c->seconds = secs;
    r.checks.push_back(*c);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"normalization", "symmetry", "frobenius", "pfaffian", "theorems", "kernel"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "normalization") return normalization(options);
  if (name == "symmetry") return symmetry(options);
  if (name == "frobenius") return frobenius(options);
  if (name == "pfaffian") return pfaffian_suite(options);
  if (name == "theorems") return theorems(options);
  if (name == "kernel") return kernel_suite(options);
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"passed", c.passed()}, {"cases", c.cases}, {"failures", c.failures}, {"seconds", c.seconds}};
  if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"schema", kSchemaVersion}, {"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace jackpf
