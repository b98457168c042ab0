#include "rect/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rect {

namespace {

PointConfig ranks_from_points(const std::vector<std::pair<double, double>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> xr(n), yr(n);
    std::vector<int> order(n);
    for (int axis = 0; axis < 2; ++axis) {
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return axis == 0 ? pts[a].first < pts[b].first : pts[a].second < pts[b].second;
        });
        for (int r = 0; r < n; ++r) {
            if (r > 0) {
                const int a = order[r - 1], b = order[r];
                const double va = axis == 0 ? pts[a].first : pts[a].second;
                const double vb = axis == 0 ? pts[b].first : pts[b].second;
                if (va == vb) {
                    throw std::invalid_argument(
                        "points share a coordinate; general position required");
                }
            }
            (axis == 0 ? xr : yr)[order[r]] = r + 1;
        }
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[xr[i] - 1] = yr[i];
    return make_point_config(perm);
}

}  // namespace

PointConfig parse_point_input(const std::string& text) {
    // JSON form first; fall back to whitespace-separated ranks
    std::string trimmed = text;
    const auto l = trimmed.find_first_not_of(" \t\r\n");
    if (l == std::string::npos) throw std::invalid_argument("empty point input");
    if (trimmed[l] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("bad point JSON: ") + e.what());
        }
        if (j.contains("perm")) {
            return make_point_config(j.at("perm").get<std::vector<int>>());
        }
        if (j.contains("points")) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : j.at("points")) {
                if (!p.is_array() || p.size() != 2) {
                    throw std::invalid_argument("points entries must be [x, y]");
                }
                pts.emplace_back(p[0].get<double>(), p[1].get<double>());
            }
            if (pts.empty()) throw std::invalid_argument("points list is empty");
            return ranks_from_points(pts);
        }
        throw std::invalid_argument("point JSON needs a \"perm\" or \"points\" field");
    }
    std::istringstream in(trimmed);
    std::vector<int> perm;
    int v;
    while (in >> v) perm.push_back(v);
    if (!in.eof()) throw std::invalid_argument("permutation must be whitespace-separated ranks");
    return make_point_config(perm);
}

std::string perm_string(const std::vector<int>& perm) {
    std::string s;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(perm[i]);
    }
    return s;
}

std::string jsonl_dump(const RectangulationSet& set, std::optional<int> d2_filter) {
    std::string out;
    long long emitted = 0;
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        if (d2_filter) {
            const auto h = degree_histogram(set.members[i]);
            const auto it = h.find(2);
            const int d2 = it == h.end() ? 0 : it->second;
            if (d2 != *d2_filter) continue;
        }
        out += set.keys[i];
        out += "\n";
        ++emitted;
    }
    nlohmann::json summary;
    summary["perm"] = set.config.perm;
    summary["rc"] = set.rc();
    summary["emitted"] = emitted;
    out += summary.dump();
    out += "\n";
    return out;
}

std::string counts_csv(const std::vector<PermCount>& counts, bool with_orbits) {
    std::string out = "perm,rc,maxDegree,d2min";
    if (with_orbits) out += ",orbitSize,orbitMembers";
    out += "\n";
    for (const PermCount& pc : counts) {
        out += "\"" + perm_string(pc.perm) + "\"," + std::to_string(pc.rc) + "," +
               std::to_string(pc.max_degree) + "," + std::to_string(pc.d2_min);
        if (with_orbits) {
            std::string orbit;
            for (std::size_t i = 0; i < pc.orbit.size(); ++i) {
                if (i) orbit += "|";
                orbit += perm_string(pc.orbit[i]);
            }
            out += "," + std::to_string(pc.orbit.size()) + ",\"" + orbit + "\"";
        }
        out += "\n";
    }
    return out;
}

std::string sweep_csv(const std::vector<BoundReport>& reports) {
    std::string out =
        "perm,rc,d2sum,dhat2_num,dhat2_den,eq2_lhs,eq2_rhs,maxChargeA_num,maxChargeA_den,"
        "maxChargeB_num,maxChargeB_den,pass\n";
    for (const BoundReport& rep : reports) {
        const Rational dhat2 = rep.dhat.count(2) ? rep.dhat.at(2) : Rational(0);
        // d2sum = dhat2 * rc, always integral
        const long long d2sum = dhat2.num() * (rep.rc / dhat2.den());
        out += "\"" + perm_string(rep.perm) + "\"," + std::to_string(rep.rc) + "," +
               std::to_string(d2sum) + "," + std::to_string(dhat2.num()) + "," +
               std::to_string(dhat2.den()) + "," + std::to_string(rep.eq2.lhs) + "," +
               std::to_string(rep.eq2.rhs) + "," + std::to_string(rep.max_charge_trim.num()) +
               "," + std::to_string(rep.max_charge_trim.den()) + "," +
               std::to_string(rep.max_charge_quarter.num()) + "," +
               std::to_string(rep.max_charge_quarter.den()) + "," +
               (rep.pass ? "1" : "0") + "\n";
    }
    return out;
}

namespace {

nlohmann::json rational_json(const Rational& r) {
    return nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

nlohmann::json charge_report_json(const ChargeReport& rep) {
    nlohmann::json j;
    j["totalC"] = rational_json(rep.total_c);
    j["perRectMinInitialSum"] = rational_json(rep.per_rect_min_initial_sum);
    j["maxDegree2Charge"] = rational_json(rep.max_degree2);
    j["maxWitness"] = {{"key", rep.max_witness_key}, {"point", rep.max_witness_point}};
    j["degree2ChargeHistogram"] = rep.degree2_histogram;
    j["impliedDhat2Lower"] = rational_json(rep.implied_dhat2_lower);
    j["exactDhat2"] = rational_json(rep.exact_dhat2);
    j["chainOk"] = rep.chain_ok;
    return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& rep) {
    nlohmann::json j;
    j["perm"] = rep.perm;
    j["rc"] = rep.rc;
    nlohmann::json dhat = nlohmann::json::object();
    for (const auto& [deg, v] : rep.dhat) dhat[std::to_string(deg)] = rational_json(v);
    j["dhat"] = dhat;
    if (rep.eq2_checked) {
        j["eq2"] = {{"lhs", rep.eq2.lhs}, {"rhs", rep.eq2.rhs}, {"equal", rep.eq2.equal}};
    }
    nlohmann::json bounds = nlohmann::json::array();
    for (const BoundCheck& b : rep.bounds) {
        bounds.push_back({{"name", b.name},
                          {"claimed", b.claimed},
                          {"observed", b.observed},
                          {"pass", b.pass}});
    }
    j["bounds"] = bounds;
    if (rep.schemes_checked) {
        j["chargeReportAfterTrim"] = charge_report_json(rep.report_trim);
        j["chargeReportAfterQuarter"] = charge_report_json(rep.report_quarter);
        j["donorCount"] = rep.donor_count;
        if (!rep.donors.empty()) {
            nlohmann::json donors = nlohmann::json::array();
            for (const DonorRecord& d : rep.donors) {
                donors.push_back({{"member", d.member},
                                  {"point", d.point},
                                  {"rightHost", d.right_host},
                                  {"leftHost", d.left_host},
                                  {"targetRight",
                                   {{"member", d.target_right},
                                    {"l", d.target_right_l},
                                    {"r", d.target_right_r},
                                    {"chargeBefore", rational_json(d.target_right_charge)}}},
                                  {"targetLeft",
                                   {{"member", d.target_left},
                                    {"l", d.target_left_l},
                                    {"r", d.target_left_r},
                                    {"chargeBefore", rational_json(d.target_left_charge)}}}});
            }
            j["donors"] = donors;
        }
    }
    j["pass"] = rep.pass;
    return j.dump(2);
}

std::string trace_json(const std::vector<IntersectionRef>& trace) {
    nlohmann::json j = nlohmann::json::array();
    for (const IntersectionRef& t : trace) {
        j.push_back({{"host", t.host},
                     {"guest", t.guest},
                     {"end", t.high_end ? "high" : "low"}});
    }
    return j.dump();
}

std::string recurrence_json(const RecurrenceReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["maxRc"] = rep.max_rc;
    j["maxRcPrev"] = rep.max_rc_prev;
    j["argmaxPerm"] = rep.argmax_perm;
    j["chainOk"] = rep.chain_ok;
    j["powerOk"] = rep.power_ok;
    j["observedRatio"] = rational_json(rep.observed_ratio);
    return j.dump(2);
}

std::string scheme_b_witness_json(const BoundReport& rep, const RectangulationSet& set) {
    nlohmann::json j;
    j["perm"] = rep.perm;
    nlohmann::json items = nlohmann::json::array();
    for (const SchemeBViolation& v : rep.scheme_b_violations) {
        nlohmann::json item;
        item["what"] = v.what;
        item["point"] = v.point;
        item["rect"] = nlohmann::json::parse(set.keys[v.member]);
        items.push_back(item);
    }
    j["violations"] = items;
    return j.dump(2);
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

}  // namespace rect
