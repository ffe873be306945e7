#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinv/json_io.hpp"

namespace spinv {

struct VerifyConfig {
  std::size_t n_max = 4;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
};

struct PropertyTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  // First few failures as "n=<n> trial=<t>: <reason>".
  std::vector<std::string> failures;
};

struct VerifySummary {
  VerifyConfig config;
  std::map<std::string, PropertyTally> properties;  // sorted by name

  bool all_passed() const;
};

// Names of every property in the battery, sorted.
std::vector<std::string> property_names();

/// Runs every property for n = 1..n_max, `trials` seeded samples each.
/// Sample seeds are derived from (seed, property, n, trial), so the summary
/// is a pure function of the config.
VerifySummary run_verification(const VerifyConfig& cfg);

Json summary_to_json(const VerifySummary& summary);

}  // namespace spinv
