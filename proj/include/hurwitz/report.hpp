#pragma once

#include <string>
#include <vector>

#include "hurwitz/complex_point.hpp"
#include "json.hpp"

namespace hurwitz {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NumericSample {
  std::vector<ComplexPoint> points;
  ComplexPoint exact;
  ComplexPoint numeric;
  double rel_err = 0;
};

/// Outcome of a verification suite. Failures are recorded, never thrown.
struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;
  std::vector<NumericSample> samples;
  bool pass = true;

  void add(CheckResult c);
  /// Appends every check and sample of `other`, prefixing check names.
  void merge(const VerificationReport& other, const std::string& prefix = {});
  nlohmann::json to_json() const;
};

}  // namespace hurwitz
