#ifndef GRP_REPORT_HPP
#define GRP_REPORT_HPP

#include <string>

#include "json.hpp"

#include "grp/lattice.hpp"

namespace grp {

inline constexpr int kReportSchemaVersion = 1;

// the stable report schema: {schema_version, group, order, prime, nu_p,
// classes[], violations[], mode, seed, elapsed_ms}; class records carry
// {order, index, nu_p, divides, witness_generators[]} in cycle notation
nlohmann::json divsyl_report_json(const DivSylReport &report,
                                  const std::string &group_name);

std::string render_report(const nlohmann::json &report);
nlohmann::json parse_report(const std::string &text);

} // namespace grp

#endif
