#pragma once

#include <json.hpp>

#include "jackpf/ensemble.hpp"
#include "jackpf/lattice.hpp"
#include "jackpf/partition.hpp"
#include "jackpf/rational.hpp"
#include "jackpf/scalar.hpp"
#include "jackpf/tagged.hpp"

namespace jackpf {

using Json = nlohmann::ordered_json;

/// Version tag written into every top-level JSON document.
inline constexpr const char* kSchemaVersion = "jackpf/1";

Json to_json(const Rational& q);
Json to_json(const GaussianRational& g);
/// {"coeffs": [[re, im] x 4], "base": "p/q"}
Json to_json(const AlgebraicScalar& a);
/// {"kind": "none"|"power"|"exp", "base": "p/q", "exponent": [re, im]}
Json to_json(const Prefactor& p);
/// {"prefactor": ..., "value": scalar}
Json to_json(const TaggedScalar& t);
Json to_json(const Partition& lambda);
Json to_json(const FrobeniusCoords& f);
Json to_json(HalfInt x);
Json to_json(const SplitConfig& x);

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
AlgebraicScalar scalar_from_json(const Json& j);
Prefactor prefactor_from_json(const Json& j);
TaggedScalar tagged_from_json(const Json& j);
Partition partition_from_json(const Json& j);
FrobeniusCoords frobenius_from_json(const Json& j);
HalfInt halfint_from_json(const Json& j);
SplitConfig config_from_json(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace jackpf
