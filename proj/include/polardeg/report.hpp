#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polardeg/field.hpp"

namespace polardeg {

/// One randomized evaluation of a fiber count. `value` is the quotient
/// dimension when the system was zero-dimensional, otherwise -1.
struct TrialOutcome {
  u64 seed = 0;
  long long value = -1;
  bool zero_dim = false;
  bool reduced = false;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Result of a randomized degree computation at one level.
struct DegreeReport {
  int level = 0;
  std::optional<long long> value;  // present iff a strict majority of trials agree (reduced)
  std::vector<TrialOutcome> trials;
  bool stable = false;             // every trial reduced and equal
  std::string note;

  /// Majority vote over the trials.
  static DegreeReport from_trials(int level, std::vector<TrialOutcome> trials);

  std::string status() const;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

/// Everything about the invocation that goes into the JSON header.
struct ReportInput {
  std::string command;
  std::vector<std::string> polys;
  std::vector<std::string> weights;
  std::size_t nvars = 0;
  FieldSpec field;
};

/// Single-level report in the documented schema.
nlohmann::ordered_json report_json(const DegreeReport& r, const ReportInput& in);
/// Several levels at once: "degrees" lists each level's value, trials are
/// concatenated in level order, "stable" is the conjunction.
nlohmann::ordered_json profile_json(const std::vector<DegreeReport>& rs, const ReportInput& in);

std::string emit_report(const DegreeReport& r, const ReportInput& in);
std::string emit_profile(const std::vector<DegreeReport>& rs, const ReportInput& in);

/// Header shared by every JSON document; exposed for error reporting.
nlohmann::ordered_json json_header(const ReportInput& in);

}  // namespace polardeg
