#include "jackpf/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "jackpf/ensemble.hpp"
#include "jackpf/error.hpp"
#include "jackpf/json_io.hpp"
#include "jackpf/kernel.hpp"
#include "jackpf/measures.hpp"
#include "jackpf/sampler.hpp"
#include "jackpf/verify.hpp"

namespace jackpf {

namespace {

/// Raised for parameter combinations that do not make sense for a command.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Params {
  std::string format;
  std::string theta = "2";
  std::string z, zprime, xi, eta, kind;
  bool plancherel = false;
  int n = -1;
  int max_size = -1;
  int radius = 5;
  std::string mode = "auto";
  std::uint64_t seed = 1;
  long count = 10;
  std::string partition, config, embed;
  std::string suite = "all";
  int max_n = 8;
  int max_window = 10;
  int random_cases = 200;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::complex<double> v) {
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
}

Json float_json(std::complex<double> v) { return Json::array({v.real(), v.imag()}); }

Rational need_rational(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

GaussianRational need_gaussian(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  try {
    return parse_gaussian(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

Rational theta_of(const Params& p) {
  const Rational theta = need_rational(p.theta, "theta");
  if (sgn(theta) <= 0) throw UsageError("--theta must be positive");
  return theta;
}

HSpec spec_of(const Params& p) {
  std::string kind = p.kind;
  if (kind.empty()) {
    if (p.plancherel) {
      kind = "plancherel";
    } else {
      const Rational theta = theta_of(p);
      if (theta == 2) kind = "ztheta2";
      else if (theta == make_rational(1, 2)) kind = "zhalf";
      else throw UsageError("the L-ensemble exists only for --theta 2 and --theta 1/2");
    }
  }
  if (kind == "plancherel") return HSpec::plancherel(need_rational(p.eta, "eta"));
  const auto z = need_gaussian(p.z, "z"), zp = need_gaussian(p.zprime, "zprime");
  const Rational xi = need_rational(p.xi, "xi");
  if (kind == "ztheta2") return HSpec::z_theta2(z, zp, xi);
  if (kind == "zhalf") return HSpec::z_half(z, zp, xi);
  throw UsageError("--kind must be ztheta2, zhalf or plancherel");
}

Json spec_json(const HSpec& s) {
  Json j{{"kind", to_string(s.kind())}};
  if (s.kind() == HKind::Plancherel) {
    j["eta"] = to_json(s.eta());
  } else {
    j["z"] = to_json(s.z());
    j["zprime"] = to_json(s.zprime());
    j["xi"] = to_json(s.xi());
  }
  return j;
}

std::string format_of(const Params& p, const char* fallback) {
  const std::string f = p.format.empty() ? fallback : p.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

/// Exact value as a plain string when it collapses to a Gaussian rational, else "prefactor * value".
std::string exact_text(const TaggedScalar& t) {
  if (auto e = t.exact(); e && e->is_constant()) return to_string(e->constant_value());
  const std::string v = t.value.is_constant() ? to_string(t.value.constant_value()) : to_string(t.value);
  return t.prefactor.to_string() + " * " + v;
}

// --- measure -------------------------------------------------------------

int cmd_measure(const Params& p, std::ostream& out) {
  const std::string format = format_of(p, "csv");
  const Rational theta = theta_of(p);
  struct Row {
    Partition lambda;
    std::string text;
    Json exact;
    std::complex<double> value;
  };
  std::vector<Row> rows;
  Json params{{"theta", to_json(theta)}};

  const bool mixed = p.plancherel ? !p.eta.empty() : !p.xi.empty();
  std::vector<Partition> ys;
  if (mixed) {
    if (p.max_size < 0) throw UsageError("--max-size is required with --xi or --eta");
    ys = enumerate_partitions_up_to(p.max_size);
    params["max_size"] = p.max_size;
  } else {
    if (p.n < 0) throw UsageError("--n is required");
    ys = enumerate_partitions(p.n);
    params["n"] = p.n;
  }

  if (p.plancherel) {
    params["measure"] = "plancherel";
    for (const auto& lambda : ys) {
      if (mixed) {
        const Rational eta = need_rational(p.eta, "eta");
        const auto t = poisson_plancherel(lambda, theta, eta);
        rows.push_back({lambda, exact_text(t), to_json(t), t.to_float()});
      } else {
        const Rational v = plancherel_n(lambda, theta);
        rows.push_back({lambda, to_string(v), to_json(v), to_double(v)});
      }
    }
    if (mixed) params["eta"] = p.eta;
  } else {
    const JackParams jp(need_gaussian(p.z, "z"), need_gaussian(p.zprime, "zprime"), theta);
    params["measure"] = "z";
    params["z"] = to_json(jp.z);
    params["zprime"] = to_json(jp.zprime);
    params["series"] = to_string(classify_parameters(jp));
    for (const auto& lambda : ys) {
      try {
        if (mixed) {
          const auto t = mixed_z_measure(lambda, jp, need_rational(p.xi, "xi"));
          rows.push_back({lambda, exact_text(t), to_json(t), t.to_float()});
        } else {
          const GaussianRational v = z_measure_n(lambda, jp);
          rows.push_back({lambda, to_string(v), to_json(v), to_float(v)});
        }
      } catch (const SingularParameters&) {
        rows.push_back({lambda, "singular", Json("singular"), std::nan("")});
      }
    }
    if (mixed) params["xi"] = p.xi;
  }

  if (format == "csv") {
    out << "partition,value,float\n";
    for (const auto& r : rows) out << csv_field(to_string(r.lambda)) << ',' << csv_field(r.text) << ',' << fmt(r.value) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"partition", to_json(r.lambda)}, {"value", r.exact}, {"float", float_json(r.value)}});
    }
    out << Json{{"schema", kSchemaVersion}, {"command", "measure"}, {"params", params}, {"rows", arr}}.dump(2) << '\n';
  }
  return kExitPass;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const Params& p, std::ostream& out) {
  const std::string format = format_of(p, "json");
  VerifyOptions o;
  o.max_n = p.max_n;
  o.max_size = p.max_size < 0 ? 6 : p.max_size;
  o.max_window = p.max_window;
  o.random_cases = p.random_cases;
  o.seed = p.seed;
  if (o.max_size > kMaxPartialSize) throw UsageError("--max-size is capped at 14");

  std::vector<std::string> names;
  if (p.suite == "all") names = suite_names();
  else names.push_back(p.suite);

  std::vector<SuiteReport> reports;
  for (const auto& name : names) reports.push_back(run_suite(name, o));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (format == "csv") {
    out << "suite,check,passed,cases,failures,seconds,counterexample\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        out << r.suite << ',' << csv_field(c.name) << ',' << (c.passed() ? "true" : "false") << ',' << c.cases << ','
            << c.failures << ',' << fmt(c.seconds) << ',' << csv_field(c.counterexample) << '\n';
      }
    }
  } else {
    Json suites = Json::array();
    for (const auto& r : reports) suites.push_back(to_json(r));
    out << Json{{"schema", kSchemaVersion}, {"command", "verify"}, {"passed", ok}, {"suites", suites}}.dump(2) << '\n';
  }
  return ok ? kExitPass : kExitIdentityFailure;
}

// --- ensemble ------------------------------------------------------------

EmbedMode embed_mode_of(const Params& p, const HSpec& spec) {
  if (p.embed.empty()) return spec.embed_mode();
  if (p.embed == "theta2") return EmbedMode::Theta2;
  if (p.embed == "theta_half") return EmbedMode::ThetaHalf;
  throw UsageError("--embed must be theta2 or theta_half");
}

SplitConfig config_of(const Params& p, const HSpec& spec, std::optional<Partition>& lambda) {
  if (!p.config.empty() && !p.partition.empty()) throw UsageError("give either --partition or --config");
  if (!p.config.empty()) {
    Json j;
    try {
      j = Json::parse(p.config);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("--config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
  }
  if (p.partition.empty()) throw UsageError("--partition or --config is required");
  lambda = parse_partition(p.partition);
  return embed(*lambda, embed_mode_of(p, spec));
}

int cmd_ensemble_pf(const Params& p, std::ostream& out) {
  const HSpec spec = spec_of(p);
  std::optional<Partition> lambda;
  const SplitConfig x = config_of(p, spec, lambda);
  const auto pf = pfaffian(l_submatrix(spec, x));
  const auto closed = pf_closed_form(spec, x);
  const bool equal = pf == closed;
  Json j{{"schema", kSchemaVersion}, {"command", "ensemble pf"}, {"spec", spec_json(spec)}, {"config", to_json(x)}};
  if (lambda) j["partition"] = to_json(*lambda);
  j["conf_L"] = is_confL(x);
  j["pfaffian"] = to_json(pf);
  j["closed_form"] = to_json(closed);
  j["equal"] = equal;
  out << j.dump(2) << '\n';
  return equal ? kExitPass : kExitIdentityFailure;
}

int cmd_ensemble_prob(const Params& p, std::ostream& out) {
  const HSpec spec = spec_of(p);
  const EmbedMode mode = embed_mode_of(p, spec);
  std::optional<Partition> lambda;
  const SplitConfig x = config_of(p, spec, lambda);
  if (!lambda) lambda = inverse_embed(x, mode);
  const auto prob = prob_L(spec, x);
  Json j{{"schema", kSchemaVersion}, {"command", "ensemble prob"}, {"spec", spec_json(spec)}, {"config", to_json(x)}};
  j["prob"] = to_json(prob);
  j["float"] = float_json(prob.to_float());
  bool equal = true;
  if (lambda) {
    j["partition"] = to_json(*lambda);
    const Rational theta = mode == EmbedMode::ThetaHalf ? make_rational(1, 2) : Rational(2);
    const TaggedScalar m = spec.kind() == HKind::Plancherel
                               ? poisson_plancherel(*lambda, theta, spec.eta())
                               : mixed_z_measure(*lambda, spec.jack_params(), spec.xi());
    j["measure"] = to_json(m);
    equal = prob == m;
  } else {
    equal = prob.value.is_zero();
    j["measure"] = nullptr;
  }
  j["equal"] = equal;
  out << j.dump(2) << '\n';
  return equal ? kExitPass : kExitIdentityFailure;
}

// --- kernel --------------------------------------------------------------

int cmd_kernel(const Params& p, std::ostream& out) {
  const std::string format = format_of(p, "csv");
  const HSpec spec = spec_of(p);
  const Window w = Window::radius(p.radius);
  bool exact = p.mode == "exact" || (p.mode == "auto" && w.size() <= kMaxExactWindow);
  if (p.mode != "exact" && p.mode != "float" && p.mode != "auto") throw UsageError("--mode must be exact, float or auto");

  const auto& pts = w.points();
  std::optional<KernelMatrix> k;
  DenseMatrix<std::complex<double>> kf(0, 0.0);
  if (exact) {
    k = kernel_K(spec, w);
    kf = DenseMatrix<std::complex<double>>(k->matrix.dimension(), 0.0);
    for (std::size_t i = 0; i < kf.size(); ++i) {
      for (std::size_t j = 0; j < kf.size(); ++j) kf(i, j) = i == j ? 0.0 : to_float(k->matrix.at(i, j));
    }
  } else {
    kf = kernel_K_float(spec, w);
  }

  auto entry = [&](std::size_t a, std::size_t b, int r, int c) { return kf(2 * a + static_cast<std::size_t>(r), 2 * b + static_cast<std::size_t>(c)); };
  if (format == "csv") {
    out << "x,y,k_pp,k_pd,k_dp,k_dd,exact\n";
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) {
        out << pts[a].twice() << ',' << pts[b].twice();
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) out << ',' << fmt(entry(a, b, r, c));
        }
        out << ',' << (exact ? "true" : "false") << '\n';
      }
    }
    return kExitPass;
  }

  Json blocks = Json::array(), rho = Json::array();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      Json kb = Json::array();
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) kb.push_back(float_json(entry(a, b, r, c)));
      }
      Json blk{{"x", pts[a].twice()}, {"y", pts[b].twice()}, {"K", kb}};
      if (exact) {
        Json eb = Json::array();
        for (const auto& s : k->block(pts[a], pts[b])) eb.push_back(to_json(s));
        blk["K_exact"] = eb;
      }
      blocks.push_back(blk);
    }
    Json r{{"x", pts[a].twice()}, {"float", float_json(rho_float(kf, w, {pts[a]}))}};
    if (exact) r["exact"] = to_json(rho_pfaffian(*k, {pts[a]}));
    rho.push_back(r);
  }
  Json window = Json::array();
  for (HalfInt x : pts) window.push_back(x.twice());
  out << Json{{"schema", kSchemaVersion}, {"command", "kernel"}, {"spec", spec_json(spec)}, {"window", window},
              {"exact", exact},       {"blocks", blocks},       {"rho1", rho}}
             .dump(2)
      << '\n';
  return kExitPass;
}

// --- sample --------------------------------------------------------------

int cmd_sample(const Params& p, std::ostream& out) {
  const std::string format = format_of(p, "json");
  SamplerConfig cfg;
  cfg.params.theta = theta_of(p);
  Json measure{{"theta", to_json(cfg.params.theta)}};
  if (p.plancherel) {
    cfg.family = SamplerConfig::Family::Plancherel;
    measure["family"] = "plancherel";
    if (!p.eta.empty()) cfg.mixing = need_rational(p.eta, "eta");
  } else {
    cfg.family = SamplerConfig::Family::ZMeasure;
    cfg.params = JackParams(need_gaussian(p.z, "z"), need_gaussian(p.zprime, "zprime"), cfg.params.theta);
    measure["family"] = "z";
    measure["z"] = to_json(cfg.params.z);
    measure["zprime"] = to_json(cfg.params.zprime);
    if (!p.xi.empty()) cfg.mixing = need_rational(p.xi, "xi");
  }
  if (cfg.mixing) {
    if (p.max_size < 0) throw UsageError("--max-size is required for mixed sampling");
    cfg.max_size = p.max_size;
    measure[p.plancherel ? "eta" : "xi"] = to_json(*cfg.mixing);
    measure["max_size"] = cfg.max_size;
  } else {
    if (p.n < 0) throw UsageError("--n is required without --xi or --eta");
    cfg.n = p.n;
    measure["n"] = cfg.n;
  }
  if (p.count < 0) throw UsageError("--count must be nonnegative");

  const PartitionSampler sampler(cfg);
  Rng rng(p.seed);
  std::vector<Partition> draws;
  draws.reserve(static_cast<std::size_t>(p.count));
  for (long i = 0; i < p.count; ++i) draws.push_back(sampler.draw(rng));

  if (format == "csv") {
    out << "# rng=" << kRngName << " seed=" << p.seed << '\n';
    if (sampler.mixed()) {
      out << "# tail_mass=" << (sampler.tail_mass_exact() ? to_string(*sampler.tail_mass_exact()) : fmt(sampler.tail_mass()))
          << '\n';
    }
    out << "index,partition\n";
    for (std::size_t i = 0; i < draws.size(); ++i) out << i << ',' << csv_field(to_string(draws[i])) << '\n';
    return kExitPass;
  }
  Json samples = Json::array();
  for (const auto& d : draws) samples.push_back(to_json(d));
  Json j{{"schema", kSchemaVersion}, {"command", "sample"}, {"rng", kRngName}, {"seed", p.seed}, {"measure", measure}};
  if (sampler.mixed()) {
    Json tail{{"float", sampler.tail_mass()}};
    tail["exact"] = sampler.tail_mass_exact() ? Json(to_string(*sampler.tail_mass_exact())) : Json(nullptr);
    j["tail_mass"] = tail;
  }
  j["samples"] = samples;
  out << j.dump(2) << '\n';
  return kExitPass;
}

// --- convergence ---------------------------------------------------------

int cmd_convergence(const Params& p, std::ostream& out) {
  const std::string format = format_of(p, "json");
  const HSpec spec = spec_of(p);
  const int max_size = p.max_size < 0 ? 10 : p.max_size;
  if (max_size > kMaxPartialSize) throw UsageError("--max-size is capped at 14");
  const auto by_degree = pf_J_plus_L_by_degree(spec, max_size);
  const double closed = spec.normalizer().to_float().real();

  AlgebraicScalar partial = AlgebraicScalar::zero(spec.ring());
  bool ok = true;
  Json rows = Json::array();
  std::vector<std::string> csv;
  for (int n = 0; n <= max_size; ++n) {
    const auto& got = by_degree[static_cast<std::size_t>(n)];
    const auto want = degree_mass(spec, n);
    const bool equal = got == want;
    ok = ok && equal;
    partial += got;
    const double pf = to_float(partial).real();
    rows.push_back(Json{{"n", n}, {"degree_sum", to_json(got)}, {"expected", to_json(want)}, {"equal", equal},
                        {"partial_float", pf}, {"residual", closed - pf}});
    csv.push_back(std::to_string(n) + ',' + fmt(to_float(got)) + ',' + (equal ? "true" : "false") + ',' + fmt(pf) + ',' +
                  fmt(closed - pf));
  }
  const double residual = closed - to_float(partial).real();
  if (format == "csv") {
    out << "n,degree_sum,equal,partial_sum,residual\n";
    for (const auto& line : csv) out << line << '\n';
  } else {
    out << Json{{"schema", kSchemaVersion},
                {"command", "convergence"},
                {"spec", spec_json(spec)},
                {"max_size", max_size},
                {"rows", rows},
                {"partial_sum", to_json(partial)},
                {"closed_form", Json{{"prefactor", to_json(spec.normalizer())}, {"float", closed}}},
                {"residual", residual},
                {"relative_residual", residual / closed},
                {"passed", ok}}
               .dump(2)
        << '\n';
  }
  return ok ? kExitPass : kExitIdentityFailure;
}

void add_spec_options(CLI::App* app, Params& p) {
  app->add_option("--kind", p.kind, "ztheta2 | zhalf | plancherel (default from --theta / --plancherel)");
  app->add_option("--theta", p.theta, "Jack parameter, 2 or 1/2");
  app->add_option("--z", p.z, "z as p/q or p/q+r/s i");
  app->add_option("--zprime", p.zprime, "z' as p/q or p/q+r/s i");
  app->add_option("--xi", p.xi, "mixing parameter xi in (0,1)");
  app->add_option("--eta", p.eta, "Plancherel parameter eta > 0");
  app->add_flag("--plancherel", p.plancherel, "Plancherel measure instead of the z-measure");
  app->add_option("--format", p.format, "json | csv");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack measures with theta = 2 and 1/2 as Pfaffian L-ensembles", "jackpf"};
  app.require_subcommand(1);
  Params p;

  auto* measure = app.add_subcommand("measure", "table of measure values over Y_n or |lambda| <= max-size");
  add_spec_options(measure, p);
  measure->add_option("--n", p.n, "partition size");
  measure->add_option("--max-size", p.max_size, "largest size for mixed measures");

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", p.suite, "normalization | symmetry | frobenius | pfaffian | theorems | kernel | all");
  verify->add_option("--max-n", p.max_n, "largest |lambda| for measure identities");
  verify->add_option("--max-size", p.max_size, "largest |lambda| for Pfaffian identities");
  verify->add_option("--max-window", p.max_window, "largest kernel window, in points");
  verify->add_option("--random-cases", p.random_cases, "random configurations off Conf^L");
  verify->add_option("--seed", p.seed, "seed for randomized checks");
  verify->add_option("--format", p.format, "json | csv");

  auto* ensemble = app.add_subcommand("ensemble", "Pfaffians and probabilities of single configurations");
  ensemble->require_subcommand(1);
  auto* pf = ensemble->add_subcommand("pf", "Pf L(X|X) against its closed form");
  auto* prob = ensemble->add_subcommand("prob", "Prob_L(X) against the measure");
  for (auto* sub : {pf, prob}) {
    add_spec_options(sub, p);
    sub->add_option("--partition", p.partition, "diagram, e.g. [3,1]");
    sub->add_option("--config", p.config, R"(configuration as {"minus":[2x...],"plus":[2x...]})");
    sub->add_option("--embed", p.embed, "theta2 | theta_half");
  }

  auto* kernel = app.add_subcommand("kernel", "correlation kernel K = J + (J+L)^-1 on a window");
  add_spec_options(kernel, p);
  kernel->add_option("--radius", p.radius, "window radius as the odd integer 2r");
  kernel->add_option("--mode", p.mode, "exact | float | auto");

  auto* sample = app.add_subcommand("sample", "exact inverse-CDF sampling");
  add_spec_options(sample, p);
  sample->add_option("--n", p.n, "partition size (fixed-size measures)");
  sample->add_option("--max-size", p.max_size, "degree cutoff for mixed measures");
  sample->add_option("--count", p.count, "number of draws");
  sample->add_option("--seed", p.seed, "RNG seed");

  auto* convergence = app.add_subcommand("convergence", "partial sums of Pf(J+L) against the closed form");
  add_spec_options(convergence, p);
  convergence->add_option("--max-size", p.max_size, "largest |lambda| (<= 14)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*measure) return cmd_measure(p, out);
    if (*verify) return cmd_verify(p, out);
    if (*pf) return cmd_ensemble_pf(p, out);
    if (*prob) return cmd_ensemble_prob(p, out);
    if (*kernel) return cmd_kernel(p, out);
    if (*sample) return cmd_sample(p, out);
    if (*convergence) return cmd_convergence(p, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIdentityFailure;
  }
  return kExitUsage;
}

}  // namespace jackpf
