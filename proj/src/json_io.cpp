#include "jackpf/json_io.hpp"

#include "jackpf/error.hpp"

namespace jackpf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(std::string("malformed JSON: ") + what);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& g) { return Json::array({to_string(g.re()), to_string(g.im())}); }

Json to_json(const AlgebraicScalar& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}, {"base", to_string(a.base())}};
}

Json to_json(const Prefactor& p) {
  const char* kind = p.kind == Prefactor::Kind::Power ? "power" : p.kind == Prefactor::Kind::Exp ? "exp" : "none";
  return Json{{"kind", kind}, {"base", to_string(p.base)}, {"exponent", to_json(p.exponent)}};
}

Json to_json(const TaggedScalar& t) { return Json{{"prefactor", to_json(t.prefactor)}, {"value", to_json(t.value)}}; }

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json to_json(const FrobeniusCoords& f) { return Json{{"P", f.P}, {"Q", f.Q}}; }

Json to_json(HalfInt x) { return x.twice(); }

Json to_json(const SplitConfig& x) {
  Json minus = Json::array(), plus = Json::array();
  for (HalfInt p : x.minus) minus.push_back(p.twice());
  for (HalfInt p : x.plus) plus.push_back(p.twice());
  return Json{{"minus", minus}, {"plus", plus}};
}

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

GaussianRational gaussian_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, "gaussian rational must be [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

AlgebraicScalar scalar_from_json(const Json& j) {
  require(j.is_object() && j.contains("coeffs") && j.contains("base"), "scalar needs coeffs and base");
  const Json& c = j.at("coeffs");
  require(c.is_array() && c.size() == 4, "scalar needs exactly 4 coefficients");
  AlgebraicScalar::Coeffs coeffs;
  for (std::size_t k = 0; k < 4; ++k) coeffs[k] = gaussian_from_json(c[k]);
  return AlgebraicScalar(QuarticRing::make(rational_from_json(j.at("base"))), coeffs);
}

Prefactor prefactor_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), "prefactor needs kind");
  const auto kind = j.at("kind").get<std::string>();
  const GaussianRational exponent = j.contains("exponent") ? gaussian_from_json(j.at("exponent")) : GaussianRational(0);
  if (kind == "none") return Prefactor::none();
  if (kind == "exp") return Prefactor::exp(exponent);
  require(kind == "power", "unknown prefactor kind");
  return Prefactor::power(rational_from_json(j.at("base")), exponent);
}

TaggedScalar tagged_from_json(const Json& j) {
  require(j.is_object() && j.contains("value"), "tagged scalar needs value");
  return {j.contains("prefactor") ? prefactor_from_json(j.at("prefactor")) : Prefactor::none(),
          scalar_from_json(j.at("value"))};
}

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be an array");
  return Partition(j.get<std::vector<int>>());
}

FrobeniusCoords frobenius_from_json(const Json& j) {
  require(j.is_object() && j.contains("P") && j.contains("Q"), "Frobenius coordinates need P and Q");
  return {j.at("P").get<std::vector<int>>(), j.at("Q").get<std::vector<int>>()};
}

HalfInt halfint_from_json(const Json& j) {
  require(j.is_number_integer(), "half-integer must be the integer 2x");
  return HalfInt(j.get<int>());
}

SplitConfig config_from_json(const Json& j) {
  require(j.is_object() && j.contains("minus") && j.contains("plus"), "configuration needs minus and plus");
  SplitConfig x;
  for (const auto& p : j.at("minus")) x.minus.push_back(halfint_from_json(p));
  for (const auto& p : j.at("plus")) x.plus.push_back(halfint_from_json(p));
  x.validate();
  return x;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace jackpf
