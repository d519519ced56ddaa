#include "grp/report.hpp"

namespace grp {

nlohmann::json divsyl_report_json(const DivSylReport &report,
                                  const std::string &group_name) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["group"] = group_name;
  j["order"] = report.group_order;
  j["prime"] = report.prime;
  j["nu_p"] = report.nu_p_G;
  j["mode"] = report.mode.kind == DivSylMode::Full ? "full" : "sampled";
  j["seed"] = report.mode.seed;
  j["elapsed_ms"] = report.elapsed_ms;

  j["classes"] = nlohmann::json::array();
  for (const DivSylClassRecord &c : report.classes) {
    nlohmann::json rec;
    rec["order"] = c.order;
    rec["index"] = report.group_order / c.order;
    rec["nu_p"] = c.nu_p;
    rec["divides"] = c.divides;
    rec["witness_generators"] = nlohmann::json::array();
    for (const Perm &g : c.generators)
      rec["witness_generators"].push_back(g.str());
    j["classes"].push_back(std::move(rec));
  }

  j["violations"] = nlohmann::json::array();
  for (std::size_t i : report.violations)
    j["violations"].push_back(i);
  return j;
}

std::string render_report(const nlohmann::json &report) {
  return report.dump(2) + "\n";
}

nlohmann::json parse_report(const std::string &text) {
  return nlohmann::json::parse(text);
}

} // namespace grp
