#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rect/charging.hpp"
#include "rect/enumerate.hpp"
#include "rect/stats.hpp"
#include "rect/transforms.hpp"

namespace rect {

// Accepts whitespace-separated ranks ("2 4 1 3"), a JSON object
// {"perm":[...]}, or {"points":[[x,y],...]} converted to ranks (throws on
// tied coordinates). Throws std::invalid_argument on malformed input.
PointConfig parse_point_input(const std::string& text);

std::string perm_string(const std::vector<int>& perm);

// one canonical key per line, then a one-line summary record
std::string jsonl_dump(const RectangulationSet& set, std::optional<int> d2_filter);

// perm,rc,maxDegree,d2min rows; representatives carry their orbit under
// symmetry reduction
std::string counts_csv(const std::vector<PermCount>& counts, bool with_orbits);

// perm,rc,d2sum,dhat2_num,dhat2_den,eq2_lhs,eq2_rhs,maxChargeA_num,
// maxChargeA_den,maxChargeB_num,maxChargeB_den,pass
std::string sweep_csv(const std::vector<BoundReport>& reports);

std::string bound_report_json(const BoundReport& rep);
std::string recurrence_json(const RecurrenceReport& rep);

// rotation traces as a JSON array of {host, guest, end} records
std::string trace_json(const std::vector<IntersectionRef>& trace);

// witness payload for a scheme-B violation, embedding the rectangulation
std::string scheme_b_witness_json(const BoundReport& rep, const RectangulationSet& set);

bool write_file(const std::string& path, const std::string& content);

}  // namespace rect
