#pragma once

#include <map>
#include <string>
#include <vector>

#include "rect/charging.hpp"
#include "rect/enumerate.hpp"
#include "rect/rational.hpp"

namespace rect {

// exact expected degree counts: j -> sum_G d_j(G) / rc(P); the values sum
// to n
std::map<int, Rational> expected_degrees(const RectangulationSet& rset);

struct Eq2Result {
    long long lhs = 0;  // sum over R(P) of d2(G)
    long long rhs = 0;  // 2 * sum_q rc(P minus q)
    bool equal = false;
};

Eq2Result verify_eq2(const PointConfig& config, RcMemo& memo,
                     const EnumerateOptions& opts = {});

struct DegreeAuditRow {
    int member = 0;
    int degree_sum = 0;
    int wall_endpoints = 0;
    bool ok = false;  // degree_sum <= 4n and deficit equals wall endpoints
};

struct DegreeAudit {
    bool pass = true;
    int max_degree_sum = 0;
    std::vector<DegreeAuditRow> failures;
};

// per rectangulation: sum_j j*d_j <= 4n, with the deficit equal to the
// number of endpoints on B
DegreeAudit degree_sum_audit(const RectangulationSet& rset);

struct RecurrenceReport {
    int n = 0;
    long long max_rc = 0;
    long long max_rc_prev = 0;
    std::vector<int> argmax_perm;
    bool chain_ok = false;  // max_rc <= 17 * max_rc_prev
    bool power_ok = false;  // max_rc <= 17^n
    Rational observed_ratio;
};

RecurrenceReport verify_recurrence(const std::vector<PermCount>& sweep_prev,
                                   const std::vector<PermCount>& sweep_n);

struct BoundCheck {
    std::string name;
    std::string claimed;
    std::string observed;
    bool pass = false;
};

// Everything the verification of one configuration produces.
struct BoundReport {
    std::vector<int> perm;
    long long rc = 0;
    std::map<int, Rational> dhat;

    bool eq2_checked = false;
    Eq2Result eq2;

    bool schemes_checked = false;
    Rational max_charge_trim;
    Rational max_charge_quarter;
    int donor_count = 0;
    std::vector<ProfileViolation> profile_violations;
    std::vector<SchemeBViolation> scheme_b_violations;
    std::vector<DonorRecord> donors;
    ChargeReport report_trim;
    ChargeReport report_quarter;

    std::vector<BoundCheck> bounds;
    bool pass = true;
};

struct VerifyConfigOptions {
    bool run_eq2 = true;
    bool run_scheme_a = true;
    bool run_scheme_b = true;
    bool oracle_crosscheck = false;
    int oracle_max_n = 4;
    EnumerateOptions enumerate;
};

// Runs the selected per-configuration checks and assembles the report.
// Every tolerance is exact; a failed check never aborts the remaining ones.
BoundReport verify_config(const PointConfig& config, RcMemo& memo,
                          const VerifyConfigOptions& opts = {});

}  // namespace rect
