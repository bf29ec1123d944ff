#include "jumploci/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace jumploci {

std::string report_json(const VerificationReport& rep) {
  // ordered_json keeps insertion order, so the layout below is the layout
  // on the wire.
  nlohmann::ordered_json j;
  j["command"] = rep.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [name, hash] : rep.inputs) j["inputs"][name] = hash;
  j["seed"] = rep.seed;
  j["rng_algorithm"] = rep.rng_algorithm;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["samples"] = c.samples;
    jc["passes"] = c.passes;
    jc["failures"] = c.failures;
    j["checks"].push_back(std::move(jc));
  }
  j["verdict"] = rep.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string report_summary(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.command << " (seed " << rep.seed << ")\n";
  for (const auto& c : rep.checks) {
    out << "  " << (c.ok() ? "ok  " : "FAIL") << " " << c.name << "  "
        << c.passes << "/" << c.samples << "\n";
    for (const auto& w : c.failures) out << "       witness: " << w << "\n";
  }
  out << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace jumploci
