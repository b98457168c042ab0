#include "rect/stats.hpp"

#include <algorithm>

namespace rect {

std::map<int, Rational> expected_degrees(const RectangulationSet& rset) {
    if (rset.members.empty()) {
        throw std::logic_error("expected_degrees: empty rectangulation set");
    }
    std::map<int, long long> sums;
    for (const Rectangulation& r : rset.members) {
        for (const auto& [j, c] : degree_histogram(r)) sums[j] += c;
    }
    std::map<int, Rational> out;
    for (const auto& [j, s] : sums) out[j] = Rational(s, rset.rc());
    return out;
}

Eq2Result verify_eq2(const PointConfig& config, RcMemo& memo,
                     const EnumerateOptions& opts) {
    Eq2Result res;
    RectangulationSet set = enumerate_backtracking(config, opts);
    for (const Rectangulation& r : set.members) {
        auto h = degree_histogram(r);
        auto it = h.find(2);
        if (it != h.end()) res.lhs += it->second;
    }
    for (int q = 1; q <= config.n(); ++q) {
        res.rhs += 2 * memo.rc_of(removed_subperm(config.perm, q), opts);
    }
    res.equal = res.lhs == res.rhs;
    return res;
}

DegreeAudit degree_sum_audit(const RectangulationSet& rset) {
    DegreeAudit audit;
    const int n = rset.config.n();
    for (int g = 0; g < static_cast<int>(rset.members.size()); ++g) {
        const Rectangulation& r = rset.members[g];
        int sum = 0;
        for (int a = 1; a <= n; ++a) sum += degree(r, a);
        const int walls = wall_endpoint_count(r);
        audit.max_degree_sum = std::max(audit.max_degree_sum, sum);
        const bool ok = sum <= 4 * n && sum + walls == 4 * n;
        if (!ok) {
            audit.pass = false;
            audit.failures.push_back({g, sum, walls, false});
        }
    }
    return audit;
}

RecurrenceReport verify_recurrence(const std::vector<PermCount>& sweep_prev,
                                   const std::vector<PermCount>& sweep_n) {
    if (sweep_prev.empty() || sweep_n.empty()) {
        throw std::invalid_argument("verify_recurrence: missing sweep data");
    }
    RecurrenceReport rep;
    rep.n = static_cast<int>(sweep_n.front().perm.size());
    for (const PermCount& pc : sweep_n) {
        if (pc.rc > rep.max_rc) {
            rep.max_rc = pc.rc;
            rep.argmax_perm = pc.perm;
        }
    }
    for (const PermCount& pc : sweep_prev) rep.max_rc_prev = std::max(rep.max_rc_prev, pc.rc);
    rep.chain_ok = rep.max_rc <= 17 * rep.max_rc_prev;
    long long pow17 = 1;
    for (int i = 0; i < rep.n; ++i) pow17 *= 17;
    rep.power_ok = rep.max_rc <= pow17;
    rep.observed_ratio = Rational(rep.max_rc, rep.max_rc_prev);
    return rep;
}

namespace {

void add_check(BoundReport& rep, const std::string& name, const std::string& claimed,
               const std::string& observed, bool pass) {
    rep.bounds.push_back({name, claimed, observed, pass});
    if (!pass) rep.pass = false;
}

}  // namespace

BoundReport verify_config(const PointConfig& config, RcMemo& memo,
                          const VerifyConfigOptions& opts) {
    BoundReport rep;
    rep.perm = config.perm;
    const int n = config.n();

    RectangulationSet set = enumerate_backtracking(config, opts.enumerate);
    rep.rc = set.rc();
    rep.dhat = expected_degrees(set);

    Rational dhat_sum;
    for (const auto& [j, v] : rep.dhat) dhat_sum += v;
    add_check(rep, "dhat-sums-to-n", Rational(n).str(), dhat_sum.str(),
              dhat_sum == Rational(n));

    const Rational dhat2 = rep.dhat.count(2) ? rep.dhat.at(2) : Rational(0);

    DegreeAudit audit = degree_sum_audit(set);
    add_check(rep, "degree-sum-at-most-4n", "<= " + std::to_string(4 * n),
              std::to_string(audit.max_degree_sum), audit.pass);

    if (opts.oracle_crosscheck) {
        OracleOptions oopts;
        oopts.max_n = opts.oracle_max_n;
        RectangulationSet oracle = enumerate_oracle(config, oopts);
        add_check(rep, "oracle-equivalence", std::to_string(set.rc()) + " keys",
                  std::to_string(oracle.rc()) + " keys", oracle.keys == set.keys);
    }

    if (opts.run_eq2) {
        rep.eq2_checked = true;
        rep.eq2 = verify_eq2(config, memo, opts.enumerate);
        add_check(rep, "eq2-identity", std::to_string(rep.eq2.lhs),
                  std::to_string(rep.eq2.rhs), rep.eq2.equal);
    }

    if (opts.run_scheme_a || opts.run_scheme_b) {
        rep.schemes_checked = true;
        ChargeLedger initial = initial_charges(set);
        const Rational total_initial = initial.total();

        // per-rectangulation initial sums are at least n
        bool sums_ok = true;
        Rational min_sum;
        bool first = true;
        for (const auto& row : initial.entries) {
            Rational s;
            for (const Rational& c : row) s += c;
            if (first || s < min_sum) min_sum = s;
            first = false;
            if (s < Rational(n)) sums_ok = false;
        }
        add_check(rep, "initial-sum-at-least-n", ">= " + std::to_string(n),
                  first ? "-" : min_sum.str(), sums_ok);

        ChargeLedger trimmed = move_to_trimmed(initial, set, opts.enumerate.workers);
        add_check(rep, "trim-move-conservation", total_initial.str(),
                  trimmed.total().str(), trimmed.total() == total_initial);
        add_check(rep, "trim-move-degree2-only", "0",
                  std::to_string(nonzero_on_higher_degree(trimmed, set).size()),
                  nonzero_on_higher_degree(trimmed, set).empty());

        rep.report_trim = charge_report(trimmed, set);
        rep.max_charge_trim = rep.report_trim.max_degree2;
        if (opts.run_scheme_a) {
            add_check(rep, "max-charge-after-trim", "<= 9", rep.max_charge_trim.str(),
                      rep.max_charge_trim <= Rational(9));
            add_check(rep, "dhat2-at-least-n-over-9", ">= " + Rational(n, 9).str(),
                      dhat2.str(), dhat2 >= Rational(n, 9));
            add_check(rep, "chain-inequality-trim", "n*rc <= C <= t*sum d2",
                      rep.report_trim.chain_ok ? "holds" : "violated",
                      rep.report_trim.chain_ok);
            rep.profile_violations = check_preimage_profiles(trimmed, set);
            add_check(rep, "trim-preimage-profile", "0 violations",
                      std::to_string(rep.profile_violations.size()),
                      rep.profile_violations.empty());
        }

        if (opts.run_scheme_b) {
            QuarterMoveResult qm = quarter_move(trimmed, set);
            rep.donors = qm.donors;
            rep.donor_count = static_cast<int>(qm.donors.size());
            rep.scheme_b_violations = qm.violations;
            add_check(rep, "quarter-move-donor-structure", "0 violations",
                      std::to_string(qm.violations.size()), qm.violations.empty());
            add_check(rep, "quarter-move-conservation", total_initial.str(),
                      qm.ledger.total().str(), qm.ledger.total() == total_initial);
            add_check(rep, "quarter-move-degree2-only", "0",
                      std::to_string(nonzero_on_higher_degree(qm.ledger, set).size()),
                      nonzero_on_higher_degree(qm.ledger, set).empty());
            rep.report_quarter = charge_report(qm.ledger, set);
            rep.max_charge_quarter = rep.report_quarter.max_degree2;
            add_check(rep, "max-charge-after-quarter", "<= 17/2",
                      rep.max_charge_quarter.str(),
                      rep.max_charge_quarter <= Rational(17, 2));
            add_check(rep, "dhat2-at-least-2n-over-17", ">= " + Rational(2 * n, 17).str(),
                      dhat2.str(), dhat2 >= Rational(2 * n, 17));
            add_check(rep, "chain-inequality-quarter", "n*rc <= C <= t*sum d2",
                      rep.report_quarter.chain_ok ? "holds" : "violated",
                      rep.report_quarter.chain_ok);
            if (rep.donor_count == 0) {
                add_check(rep, "no-donors-stage-unchanged", "stages equal",
                          qm.ledger.entries == trimmed.entries ? "equal" : "differ",
                          qm.ledger.entries == trimmed.entries);
            }
        }
    }
    return rep;
}

}  // namespace rect
