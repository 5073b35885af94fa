#include "bulkcor/report.hpp"

#include <json.hpp>
#include <sstream>

namespace bulkcor {

void Report::add(std::string id, bool pass, std::string witness) {
  checks.push_back(CheckResult{std::move(id), pass, std::move(witness)});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.check_id == id) return &c;
  return nullptr;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json out;
  out["schema"] = "report-v1";
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["check_id"] = c.check_id;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["witness"] = c.witness;
    out["checks"].push_back(jc);
  }
  out["all_pass"] = r.all_pass();
  return out.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.check_id;
    if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  os << (r.all_pass() ? "OK" : "FAILED") << " (" << r.checks.size()
     << " checks)\n";
  return os.str();
}

}  // namespace bulkcor
