#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossrank/scalar.hpp"
#include "crossrank/shift_space.hpp"

namespace crossrank::cli {

struct CheckResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// mass, hom, oracle, bratteli, sylvester.
const std::vector<std::string>& suite_names();

/// Runs one property suite. Throws ConfigError for an unknown suite name.
CheckResult run_suite(const std::string& name, std::uint64_t seed, const SystemConfig& sys, Field field);

}  // namespace crossrank::cli
