#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jumploci {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::vector<std::string> failures;  // serialized witnesses

  bool ok() const { return failures.empty() && passes == samples; }
};

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, content hash)
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

/* Machine-readable serialization; field order fixed, no timing data, so
   identical inputs and seed give byte-identical output. */
std::string report_json(const VerificationReport& rep);

/* One line per check plus a verdict, for human consumption on stderr. */
std::string report_summary(const VerificationReport& rep);

}  // namespace jumploci
