#include <doctest.h>

#include "jackpf/error.hpp"
#include "jackpf/json_io.hpp"

using namespace jackpf;

TEST_CASE("scalar schema") {
  const auto ring = QuarticRing::make(make_rational(1, 3));
  AlgebraicScalar::Coeffs c{GaussianRational(make_rational(1, 2)), GaussianRational(0, 1), GaussianRational(),
                            GaussianRational(make_rational(-7, 3), make_rational(2, 5))};
  const AlgebraicScalar a(ring, c);
  const Json j = to_json(a);
  CHECK(j.dump() == R"({"coeffs":[["1/2","0/1"],["0/1","1/1"],["0/1","0/1"],["-7/3","2/5"]],"base":"1/3"})");
  const auto back = scalar_from_json(Json::parse(j.dump()));
  CHECK(back == a);
  CHECK(back.coeffs() == a.coeffs());
}

TEST_CASE("round trips") {
  CHECK(rational_from_json(to_json(make_rational(-3, 4))) == make_rational(-3, 4));
  CHECK(gaussian_from_json(to_json(GaussianRational(1, -1))) == GaussianRational(1, -1));
  CHECK(partition_from_json(to_json(Partition({3, 1}))) == Partition({3, 1}));
  CHECK(to_json(Partition({3, 1})).dump() == "[3,1]");
  const FrobeniusCoords f{{2, 0}, {1, 0}};
  CHECK(to_json(f).dump() == R"({"P":[2,0],"Q":[1,0]})");
  CHECK(frobenius_from_json(to_json(f)) == f);
  CHECK(to_json(HalfInt(-3)).dump() == "-3");
  CHECK(halfint_from_json(Json(-3)) == HalfInt(-3));
  const SplitConfig x = embed_theta2(Partition({2, 1}));
  CHECK(to_json(x).dump() == R"({"minus":[-7,-1],"plus":[3]})");
  CHECK(config_from_json(to_json(x)) == x);
  const TaggedScalar t{Prefactor::power(make_rational(15, 16), GaussianRational(6)), AlgebraicScalar::one(QuarticRing::make(2))};
  CHECK(tagged_from_json(to_json(t)) == t);
  const Prefactor e = Prefactor::exp(GaussianRational(make_rational(-1, 2)));
  CHECK(prefactor_from_json(to_json(e)) == e);
  CHECK(prefactor_from_json(to_json(Prefactor::none())) == Prefactor::none());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(rational_from_json(Json(3)), InvalidArgument);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"coeffs":[],"base":"1/2"})")), InvalidArgument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"minus":[1],"plus":[]})")), InvalidArgument);
  CHECK_THROWS_AS(halfint_from_json(Json(2)), InvalidArgument);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), InvalidArgument);
  CHECK_THROWS_AS(prefactor_from_json(Json::parse(R"({"kind":"log"})")), InvalidArgument);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("[2,1]") == "\"[2,1]\"");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
}
