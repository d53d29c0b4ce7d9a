#include "hurwitz/report.hpp"

namespace hurwitz {

void VerificationReport::add(CheckResult c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (CheckResult c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    add(std::move(c));
  }
  samples.insert(samples.end(), other.samples.begin(), other.samples.end());
  pass = pass && other.pass;
}

nlohmann::json VerificationReport::to_json() const {
  auto pair = [](const ComplexPoint& p) { return nlohmann::json::array({p.real(), p.imag()}); };
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["params"] = params;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  nlohmann::json ss = nlohmann::json::array();
  for (const auto& s : samples) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) pts.push_back(pair(p));
    ss.push_back({{"points", pts}, {"exact", pair(s.exact)}, {"numeric", pair(s.numeric)}, {"rel_err", s.rel_err}});
  }
  j["samples"] = ss;
  j["pass"] = pass;
  return j;
}

}  // namespace hurwitz
