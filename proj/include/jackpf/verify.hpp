#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "jackpf/json_io.hpp"

namespace jackpf {

/// Outcome of one identity over all its test cases.
struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  /// First failing case, empty when everything passed.
  std::string counterexample;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
  /// Records one case; describe() is only called for the first failure.
  void expect(bool ok, const std::function<std::string()>& describe);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyOptions {
  int max_n = 8;         // measure-side identities
  int max_size = 6;      // Pfaffian-side identities
  int max_window = 10;   // kernel windows, in points
  int random_cases = 200;
  std::uint64_t seed = 20240601;
};

const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

Json to_json(const CheckResult& c);
Json to_json(const SuiteReport& r);

/// Parameter pairs (z, z') used throughout the checks: (4,3), (1/3,5/3), (1+i,1-i).
struct ZPair {
  GaussianRational z, zprime;
  std::string label;
};
const std::vector<ZPair>& z_grid();

}  // namespace jackpf
