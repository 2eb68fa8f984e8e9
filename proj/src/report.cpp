#include "blasius/report.hpp"

#include <chrono>
#include <fstream>

namespace blasius {

namespace {
const char* kSections[] = {"residual",    "coefficients", "energy",    "inner_error",
                           "far_field",   "matching",     "validation"};

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}
}  // namespace

const char* CertReport::status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NonRigorous: return "non_rigorous";
    case Status::Skipped: return "skipped";
    case Status::Info: return "info";
  }
  return "unknown";
}

CertReport::CertReport(const std::string& alpha, const std::string& mode,
                       const std::string& method) {
  root_["schema_version"] = "blasius-cert-report-v1";
  root_["metadata"] = {{"tool", "blasius-certify"},
                       {"version", "1.0.0"},
                       {"timestamp", iso_timestamp()},
                       {"alpha", alpha},
                       {"mode", mode},
                       {"method", method}};
  root_["sections"] = nlohmann::ordered_json::object();
  for (const char* s : kSections) root_["sections"][s] = nlohmann::ordered_json::array();
}

void CertReport::push(const std::string& section, nlohmann::ordered_json entry, Status status) {
  entry["status"] = status_name(status);
  if (status == Status::Fail) ++failures_;
  root_["sections"][section].push_back(std::move(entry));
}

void CertReport::add_bound_check(const std::string& section, const std::string& name,
                                 const Enclosure& computed, double claimed_upper, Status status,
                                 const std::string& note) {
  nlohmann::ordered_json e;
  e["name"] = name;
  e["claimed"] = {{"kind", "upper_bound"}, {"value", claimed_upper}, {"source", "reference"}};
  e["computed"] = {{"lo", computed.lo}, {"hi", computed.hi}};
  if (!note.empty()) e["note"] = note;
  push(section, std::move(e), status);
}

void CertReport::add_interval_check(const std::string& section, const std::string& name,
                                    const Enclosure& computed, double claimed_lo,
                                    double claimed_hi, Status status, const std::string& note) {
  nlohmann::ordered_json e;
  e["name"] = name;
  e["claimed"] = {{"kind", "interval"}, {"lo", claimed_lo}, {"hi", claimed_hi}, {"source", "reference"}};
  e["computed"] = {{"lo", computed.lo}, {"hi", computed.hi}};
  if (!note.empty()) e["note"] = note;
  push(section, std::move(e), status);
}

void CertReport::add_value(const std::string& section, const std::string& name,
                           const Enclosure& computed, Status status, const std::string& note) {
  nlohmann::ordered_json e;
  e["name"] = name;
  e["claimed"] = {{"kind", "none"}};
  e["computed"] = {{"lo", computed.lo}, {"hi", computed.hi}};
  if (!note.empty()) e["note"] = note;
  push(section, std::move(e), status);
}

void CertReport::add_scalar(const std::string& section, const std::string& name, double value,
                            Status status, const std::string& note) {
  nlohmann::ordered_json e;
  e["name"] = name;
  e["claimed"] = {{"kind", "none"}};
  e["computed"] = {{"value", value}};
  if (!note.empty()) e["note"] = note;
  push(section, std::move(e), status);
}

void CertReport::add_skipped(const std::string& section, const std::string& name,
                             const std::string& note) {
  nlohmann::ordered_json e;
  e["name"] = name;
  e["claimed"] = {{"kind", "none"}};
  e["computed"] = nullptr;
  if (!note.empty()) e["note"] = note;
  push(section, std::move(e), Status::Skipped);
}

nlohmann::ordered_json CertReport::to_json() const {
  nlohmann::ordered_json out = root_;
  out["summary"] = {{"certified", failures_ == 0}, {"failures", failures_}};
  return out;
}

void CertReport::write(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("CertReport::write: cannot open " + path);
  f << to_json().dump(2) << "\n";
}

std::string CertReport::summary_line() const {
  return failures_ == 0 ? "certified: all checks passed"
                        : "certification FAILED: " + std::to_string(failures_) + " check(s)";
}

}  // namespace blasius
