#pragma once

// Invariant suites over every module, reporting the first counterexample of
// each failing check.
//
// max_size bounds the exhaustive label-set sizes; randomized checks run
// `samples` seeded cases one size above it where the suites call for it.

#include <cstdint>
#include <string>
#include <vector>

namespace bessel::verify {

struct Options {
  std::size_t max_size = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

using Report = std::vector<CheckResult>;

Report counting(const Options& opt);
Report orient(const Options& opt);
Report operad(const Options& opt);
Report relations(const Options& opt);
Report hopf(const Options& opt);
Report gamma(const Options& opt);
Report dual(const Options& opt);
Report all(const Options& opt);

bool passed(const Report& r);

}  // namespace bessel::verify
