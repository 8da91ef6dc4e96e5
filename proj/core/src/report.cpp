#include "heiscat/report.hpp"

#include <json.hpp>

namespace heiscat {

void VerificationReport::add(std::string check, int n, bool pass, std::string detail) {
  checks.push_back({std::move(check), n, pass, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

const VerificationReport& VerificationReport::require() const {
  if (const CheckResult* bad = first_failure())
    throw VerificationFailure(bad->check + " (n=" + std::to_string(bad->n) + ")" +
                              (bad->detail.empty() ? "" : ": " + bad->detail));
  return *this;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"check", c.check}, {"n", c.n}, {"pass", c.pass}, {"detail", c.detail}});
  return arr.dump();
}

std::string VerificationReport::str() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "pass  " : "FAIL  ";
    out += c.check + " n=" + std::to_string(c.n);
    if (!c.detail.empty()) out += "  " + c.detail;
    out += '\n';
  }
  return out;
}

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::string cases_to_json(const std::vector<VerificationCase>& cases, const std::string& version) {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    j["cases"].push_back({{"id", c.id},
                          {"module", c.module},
                          {"parameters", params},
                          {"status", status_name(c.status)},
                          {"detail", c.detail}});
  }
  return j.dump(2);
}

}  // namespace heiscat
