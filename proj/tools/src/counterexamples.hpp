#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dimlift::cli {

struct SuiteResult {
  bool confirmed = false;
  std::string summary;
  std::vector<std::string> details;  // one line per failed trial
};

SuiteResult run_nonsimpl_square(std::uint64_t seed, std::size_t trials = 100);
SuiteResult run_q_example();
SuiteResult run_idempotent(std::uint64_t seed, std::size_t trials = 200);
SuiteResult run_lex(std::uint64_t seed, std::size_t trials = 500);

/// Names accepted by `dimlift counterexamples`.
const std::vector<std::string>& counterexample_names();
SuiteResult run_counterexample(const std::string& name, std::uint64_t seed);

}  // namespace dimlift::cli
