#pragma once

// Verification reports produced by the verify_* operations and the
// VerificationCase records emitted by the command-line suite.

#include <map>
#include <string>
#include <vector>

#include "heiscat/scalar.hpp"

namespace heiscat {

struct VerificationFailure : Error {
  explicit VerificationFailure(const std::string& what) : Error("VerificationFailure", what) {}
};

struct CheckResult {
  std::string check;
  int n = 0;
  bool pass = false;
  std::string detail;
};

/// Ordered list of named checks.  Verifications always return the whole
/// report; `require()` turns the first failing check into an exception.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string check, int n, bool pass, std::string detail = {});
  void append(const VerificationReport& other);
  bool passed() const;
  const CheckResult* first_failure() const;
  /// Throws VerificationFailure naming the first failing check.
  const VerificationReport& require() const;
  /// JSON array of {check, n, pass, detail}.
  std::string to_json() const;
  std::string str() const;
};

enum class CaseStatus { pass, fail, skipped };

std::string status_name(CaseStatus s);

struct VerificationCase {
  std::string id;
  std::string module;
  std::map<std::string, std::string> parameters;
  CaseStatus status = CaseStatus::skipped;
  std::string detail;
};

/// `{"version": ..., "cases": [...]}` with cases in the given order.
std::string cases_to_json(const std::vector<VerificationCase>& cases, const std::string& version);

}  // namespace heiscat
