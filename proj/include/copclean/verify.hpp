#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copclean/json_io.hpp"

namespace copclean {

struct SuiteOptions {
  /// 0 picks the suite default
  int max_n = 0;
  int k = 2;
  int m = 12;
  int l = 1;
  std::uint64_t samples = 1'000'000;
  /// m for the sampled blocking run
  int sampled_m = 16;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timing = false;
  std::uint64_t state_budget = default_state_budget();
};

struct SuiteReport {
  std::string suite;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> counterexamples;
  double wall_time = 0.0;
  Json details = Json::object();

  bool ok() const { return failed == 0; }
  Json to_json(bool timing) const;
};

const std::vector<std::string>& registered_suites();
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace copclean
