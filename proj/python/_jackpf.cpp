#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jackpf/cli.hpp"
#include "jackpf/ensemble.hpp"
#include "jackpf/error.hpp"
#include "jackpf/kernel.hpp"
#include "jackpf/sampler.hpp"
#include "jackpf/verify.hpp"

namespace py = pybind11;
using namespace jackpf;

namespace {

using Parts = std::vector<int>;
using Pair = std::pair<std::string, std::string>;

Pair split(const GaussianRational& g) { return {to_string(g.re()), to_string(g.im())}; }

EmbedMode mode_of(const std::string& mode) {
  if (mode == "theta2") return EmbedMode::Theta2;
  if (mode == "theta_half") return EmbedMode::ThetaHalf;
  throw InvalidArgument("embedding mode must be theta2 or theta_half");
}

// param is xi for the z-kinds and eta for plancherel
HSpec spec_of(const std::string& kind, const std::string& z, const std::string& zprime, const std::string& param) {
  if (kind == "plancherel") return HSpec::plancherel(parse_rational(param));
  if (kind == "ztheta2") return HSpec::z_theta2(parse_gaussian(z), parse_gaussian(zprime), parse_rational(param));
  if (kind == "zhalf") return HSpec::z_half(parse_gaussian(z), parse_gaussian(zprime), parse_rational(param));
  throw InvalidArgument("kind must be ztheta2, zhalf or plancherel");
}

std::vector<std::string> values(const std::vector<HalfInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x.value()));
  return out;
}

std::vector<HalfInt> halfints(const std::vector<std::string>& xs) {
  std::vector<HalfInt> out;
  for (const auto& s : xs) {
    const Rational twice = 2 * parse_rational(s);
    if (!is_integer(twice)) throw InvalidArgument("not a half-integer: " + s);
    out.emplace_back(static_cast<int>(twice.get_num().get_si()));
  }
  return out;
}

std::pair<double, double> complex_pair(std::complex<double> c) { return {c.real(), c.imag()}; }

}  // namespace

PYBIND11_MODULE(_jackpf, m) {
  m.doc() = "Exact Jack measures at theta = 2 and 1/2 and their Pfaffian L-ensembles";

  static py::exception<Error> base(m, "JackpfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.attr("schema_version") = kSchemaVersion;
  m.attr("rng_name") = kRngName;

  m.def("partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
    return out;
  }, py::arg("n"));
  m.def("conjugate", [](const Parts& p) { return conjugate(Partition(p)).parts(); }, py::arg("parts"));
  m.def("frobenius", [](const Parts& p) {
    const auto f = to_frobenius(Partition(p));
    return std::make_pair(f.P, f.Q);
  }, py::arg("parts"));

  m.def("z_measure", [](const Parts& p, const std::string& z, const std::string& zp, const std::string& theta) {
    return split(z_measure_n(Partition(p), JackParams(parse_gaussian(z), parse_gaussian(zp), parse_rational(theta))));
  }, py::arg("parts"), py::arg("z"), py::arg("zprime"), py::arg("theta"));
  m.def("plancherel_measure", [](const Parts& p, const std::string& theta) {
    return to_string(plancherel_n(Partition(p), parse_rational(theta)));
  }, py::arg("parts"), py::arg("theta"));
  m.def("series_class", [](const std::string& z, const std::string& zp, const std::string& theta) {
    return to_string(classify_parameters(JackParams(parse_gaussian(z), parse_gaussian(zp), parse_rational(theta))));
  }, py::arg("z"), py::arg("zprime"), py::arg("theta"));

  m.def("embed", [](const Parts& p, const std::string& mode) {
    const SplitConfig x = embed(Partition(p), mode_of(mode));
    return std::make_pair(values(x.minus), values(x.plus));
  }, py::arg("parts"), py::arg("mode") = "theta2");
  m.def("inverse_embed", [](const std::vector<std::string>& minus, const std::vector<std::string>& plus,
                            const std::string& mode) -> std::optional<Parts> {
    SplitConfig x{halfints(minus), halfints(plus)};
    x.validate();
    const auto lambda = inverse_embed(x, mode_of(mode));
    if (!lambda) return std::nullopt;
    return lambda->parts();
  }, py::arg("minus"), py::arg("plus"), py::arg("mode") = "theta2");

  m.def("pfaffian", [](const std::string& kind, const std::string& z, const std::string& zp, const std::string& param,
                       const Parts& p) {
    const HSpec spec = spec_of(kind, z, zp, param);
    const SplitConfig x = embed(Partition(p), spec.embed_mode());
    const auto pf = pfaffian(l_submatrix(spec, x));
    return py::make_tuple(complex_pair(to_float(pf)), pf == pf_closed_form(spec, x));
  }, py::arg("kind"), py::arg("z"), py::arg("zprime"), py::arg("param"), py::arg("parts"));
  m.def("ensemble_probability", [](const std::string& kind, const std::string& z, const std::string& zp,
                                   const std::string& param, const Parts& p) {
    const HSpec spec = spec_of(kind, z, zp, param);
    const SplitConfig x = embed(Partition(p), spec.embed_mode());
    return complex_pair(prob_L(spec, x).to_float());
  }, py::arg("kind"), py::arg("z"), py::arg("zprime"), py::arg("param"), py::arg("parts"));
  m.def("rho_float", [](const std::string& kind, const std::string& z, const std::string& zp, const std::string& param,
                        int radius_twice, const std::vector<std::string>& points) {
    const HSpec spec = spec_of(kind, z, zp, param);
    const Window w = Window::radius(radius_twice);
    return complex_pair(rho_float(kernel_K_float(spec, w), w, halfints(points)));
  }, py::arg("kind"), py::arg("z"), py::arg("zprime"), py::arg("param"), py::arg("radius_twice"), py::arg("points"));

  m.def("verify", [](const std::string& suite, int max_n, int max_size, int max_window, int random_cases,
                     std::uint64_t seed) {
    VerifyOptions o{max_n, max_size, max_window, random_cases, seed};
    return to_json(run_suite(suite, o)).dump();
  }, py::arg("suite"), py::arg("max_n") = 8, py::arg("max_size") = 6, py::arg("max_window") = 10,
        py::arg("random_cases") = 200, py::arg("seed") = 20240601);

  m.def("sample", [](bool plancherel, const std::string& z, const std::string& zp, const std::string& theta, int n,
                     long count, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.family = plancherel ? SamplerConfig::Family::Plancherel : SamplerConfig::Family::ZMeasure;
    if (plancherel) {
      cfg.params.theta = parse_rational(theta);
    } else {
      cfg.params = JackParams(parse_gaussian(z), parse_gaussian(zp), parse_rational(theta));
    }
    cfg.n = n;
    const PartitionSampler sampler(cfg);
    Rng rng(seed);
    std::vector<Parts> out;
    for (long i = 0; i < count; ++i) out.push_back(sampler.draw(rng).parts());
    return out;
  }, py::arg("plancherel"), py::arg("z"), py::arg("zprime"), py::arg("theta"), py::arg("n"), py::arg("count"),
        py::arg("seed"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"jackpf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
