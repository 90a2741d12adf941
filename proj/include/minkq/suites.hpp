#pragma once

// Seeded randomized property suites. Every instance is replayable from
// (suite, seed, index): its generator is Rng(instance_seed(suite, seed, index)).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minkq/random.hpp"

namespace minkq {

struct SuiteCase {
  int index = 0;
  std::uint64_t seed = 0;  // instance seed
  bool pass = false;
  double metric = 0.0;     // suite-specific, see suite_description
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int passed = 0;
  std::vector<SuiteCase> cases;
  bool ok() const { return passed == static_cast<int>(cases.size()); }
};

const std::vector<std::string>& suite_names();
std::string suite_description(std::string_view suite);

std::uint64_t instance_seed(std::string_view suite, std::uint64_t seed, int index);

/// Random hull with 5..20 points in [-1,1]^3 drawn from `rng`.
Polytope draw_hull(Rng& rng);

SuiteCase run_case(std::string_view suite, std::uint64_t seed, int index);
/// BadParam for an unknown suite or n < 1.
SuiteResult run_suite(std::string_view suite, int n, std::uint64_t seed);

}  // namespace minkq
