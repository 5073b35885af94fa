#pragma once

#include <string>
#include <vector>

namespace bulkcor {

struct CheckResult {
  std::string check_id;
  bool pass = false;
  std::string witness;  // first violating datum on failure, or a short note
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string id, bool pass, std::string witness = "");
  bool all_pass() const;
  const CheckResult* find(const std::string& id) const;
};

// "report-v1": list of {check_id, status, witness}; stable field order so
// byte-identical output is reproducible across runs and thread counts.
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace bulkcor
