#pragma once

#include <json.hpp>

#include <string>

#include "blasius/enclosure.hpp"

namespace blasius {

// Machine-readable certification record. Every claimed target the pipeline
// checks appears exactly once, with the computed enclosure next to it; all
// sections are always present, entries that were not computed in a given run
// are emitted with status "skipped".
class CertReport {
public:
  enum class Status { Pass, Fail, NonRigorous, Skipped, Info };

  CertReport(const std::string& alpha, const std::string& mode, const std::string& method);

  void add_bound_check(const std::string& section, const std::string& name,
                       const Enclosure& computed, double claimed_upper, Status status,
                       const std::string& note = "");
  void add_interval_check(const std::string& section, const std::string& name,
                          const Enclosure& computed, double claimed_lo, double claimed_hi,
                          Status status, const std::string& note = "");
  void add_value(const std::string& section, const std::string& name, const Enclosure& computed,
                 Status status, const std::string& note = "");
  void add_scalar(const std::string& section, const std::string& name, double value, Status status,
                  const std::string& note = "");
  void add_skipped(const std::string& section, const std::string& name, const std::string& note = "");

  // pass/fail verdict across non-diagnostic entries
  bool all_certified() const { return failures_ == 0; }
  int failures() const { return failures_; }

  nlohmann::ordered_json to_json() const;
  void write(const std::string& path) const;
  std::string summary_line() const;

  static const char* status_name(Status s);

private:
  void push(const std::string& section, nlohmann::ordered_json entry, Status status);
  nlohmann::ordered_json root_;
  int failures_ = 0;
};

}  // namespace blasius
