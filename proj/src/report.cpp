#include "polardeg/report.hpp"

#include <map>

namespace polardeg {

using nlohmann::ordered_json;

DegreeReport DegreeReport::from_trials(int level, std::vector<TrialOutcome> trials) {
  DegreeReport r;
  r.level = level;
  r.trials = std::move(trials);
  std::map<long long, std::size_t> votes;
  for (const auto& t : r.trials)
    if (t.zero_dim && t.reduced) ++votes[t.value];
  for (const auto& [value, count] : votes)
    if (2 * count > r.trials.size()) r.value = value;
  r.stable = !r.trials.empty() && r.value && votes[*r.value] == r.trials.size();
  return r;
}

std::string DegreeReport::status() const {
  if (trials.empty() || !value) return "error";
  return stable ? "ok" : "unstable";
}

ordered_json json_header(const ReportInput& in) {
  ordered_json j;
  j["command"] = in.command;
  j["input"] = {{"polys", in.polys}, {"weights", in.weights}, {"nvars", in.nvars}};
  ordered_json field;
  field["kind"] = in.field.kind_name();
  if (in.field.kind == FieldSpec::Kind::prime_field) field["prime"] = in.field.modulus;
  j["field"] = field;
  return j;
}

namespace {

ordered_json trial_json(const TrialOutcome& t) {
  return {{"seed", t.seed}, {"value", t.value}, {"zero_dim", t.zero_dim}, {"reduced", t.reduced}};
}

std::string failure_message(const DegreeReport& r) {
  if (r.trials.empty()) return "no trials were run";
  if (!r.value) return "no strict majority of reduced zero-dimensional trials at level " + std::to_string(r.level);
  return "trials disagree at level " + std::to_string(r.level);
}

}  // namespace

ordered_json report_json(const DegreeReport& r, const ReportInput& in) {
  ordered_json j = json_header(in);
  j["i"] = r.level;
  if (r.value) j["value"] = *r.value;
  ordered_json trials = ordered_json::array();
  for (const auto& t : r.trials) trials.push_back(trial_json(t));
  j["trials"] = trials;
  j["stable"] = r.stable;
  j["status"] = r.status();
  if (r.status() != "ok") {
    j["message"] = failure_message(r);
  } else if (!r.note.empty()) {
    j["message"] = r.note;
  }
  return j;
}

ordered_json profile_json(const std::vector<DegreeReport>& rs, const ReportInput& in) {
  ordered_json j = json_header(in);
  ordered_json degrees = ordered_json::array();
  ordered_json trials = ordered_json::array();
  bool stable = !rs.empty();
  std::string status = rs.empty() ? "error" : "ok";
  std::string message = rs.empty() ? "no levels computed" : "";
  std::string note;
  for (const auto& r : rs) {
    degrees.push_back(r.value ? ordered_json(*r.value) : ordered_json(nullptr));
    for (const auto& t : r.trials) trials.push_back(trial_json(t));
    stable = stable && r.stable;
    if (r.status() == "error") {
      status = "error";
      if (message.empty()) message = failure_message(r);
    } else if (r.status() == "unstable" && status == "ok") {
      status = "unstable";
      message = failure_message(r);
    }
    if (!r.note.empty() && note.empty()) note = r.note;
  }
  j["degrees"] = degrees;
  j["trials"] = trials;
  j["stable"] = stable;
  j["status"] = status;
  if (!message.empty()) {
    j["message"] = message;
  } else if (!note.empty()) {
    j["message"] = note;
  }
  return j;
}

std::string emit_report(const DegreeReport& r, const ReportInput& in) { return report_json(r, in).dump(); }

std::string emit_profile(const std::vector<DegreeReport>& rs, const ReportInput& in) {
  return profile_json(rs, in).dump();
}

}  // namespace polardeg
