#pragma once

// The invariant suite behind `heiscat verify-all`: one case per property,
// sized by the degree and rank limits.

#include <cstdint>
#include <string>
#include <vector>

#include "heiscat/report.hpp"

namespace heiscat {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteOptions {
  int max_degree = 6;
  int max_rank = 3;
  std::uint64_t seed = 1;
  /// Run cases on worker threads; the output order does not depend on it.
  bool parallel = true;
};

/// Every case, sorted by module and then id.
std::vector<VerificationCase> run_suite(const SuiteOptions& options);

/// Ids in the order run_suite reports them.
std::vector<std::string> suite_case_ids();

/// Diagram literals used by the simplifier checks.
std::vector<std::string> diagram_corpus();

}  // namespace heiscat
