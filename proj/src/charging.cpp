#include "rect/charging.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rect/transforms.hpp"

namespace rect {

Rational ChargeLedger::total() const {
    Rational t;
    for (const auto& row : entries) {
        for (const Rational& c : row) t += c;
    }
    return t;
}

ChargeLedger initial_charges(const RectangulationSet& rset) {
    ChargeLedger ledger;
    ledger.stage = ChargeLedger::Stage::Initial;
    ledger.entries.reserve(rset.members.size());
    for (const Rectangulation& r : rset.members) {
        std::vector<Rational> row;
        row.reserve(r.n());
        for (int a = 1; a <= r.n(); ++a) row.emplace_back(5 - degree(r, a));
        ledger.entries.push_back(std::move(row));
    }
    return ledger;
}

ChargeLedger move_to_trimmed(const ChargeLedger& ledger, const RectangulationSet& rset,
                             int workers) {
    if (ledger.stage != ChargeLedger::Stage::Initial) {
        throw std::logic_error("move_to_trimmed: ledger must be at the initial stage");
    }
    const int n = rset.config.n();
    const int m = static_cast<int>(rset.members.size());

    // (member, point, target member) for every degree > 2 segment;
    // failures are collected and rethrown outside the parallel region
    std::vector<std::vector<int>> targets(m, std::vector<int>(n, -1));
    std::atomic<bool> missing{false};
    (void)workers;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : omp_get_max_threads()) if (workers != 1)
#endif
    for (int g = 0; g < m; ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= n; ++a) {
            if (degree(r, a) <= 2) continue;
            TrimResult t = trim(r, a);
            const int idx = rset.find(canonical_key(t.rect));
            if (idx < 0) missing = true;
            targets[g][a - 1] = idx;
        }
    }
    if (missing) {
        throw std::logic_error(
            "move_to_trimmed: trim target missing from R(P); the enumeration is incomplete");
    }

    ChargeLedger out = ledger;
    out.stage = ChargeLedger::Stage::AfterTrimMove;
    for (int g = 0; g < m; ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= n; ++a) {
            const int idx = targets[g][a - 1];
            if (idx < 0) continue;
            const Rational amount = ledger.entries[g][a - 1];
            out.entries[g][a - 1] -= amount;
            out.entries[idx][a - 1] += amount;
            out.trim_transfers.push_back(
                ChargeLedger::TrimTransfer{g, idx, a, amount, degree(r, a)});
        }
    }
    return out;
}

std::map<int, int> trim_preimage_profile(const ChargeLedger& ledger, int member, int point) {
    std::map<int, int> profile;
    for (const auto& t : ledger.trim_transfers) {
        if (t.to == member && t.point == point) ++profile[t.source_degree];
    }
    return profile;
}

std::vector<ProfileViolation> check_preimage_profiles(const ChargeLedger& ledger,
                                                      const RectangulationSet& rset) {
    std::vector<ProfileViolation> out;
    const int n = rset.config.n();
    const int m = static_cast<int>(rset.members.size());
    // bucket transfers once; the per-segment API stays for spot queries
    std::vector<std::vector<std::pair<int, Rational>>> inflow(
        static_cast<std::size_t>(m) * n);
    for (const auto& t : ledger.trim_transfers) {
        inflow[static_cast<std::size_t>(t.to) * n + (t.point - 1)].emplace_back(
            t.source_degree, t.amount);
    }
    for (int g = 0; g < m; ++g) {
        for (int a = 1; a <= n; ++a) {
            const auto& in = inflow[static_cast<std::size_t>(g) * n + (a - 1)];
            if (in.empty()) continue;
            int deg3 = 0, deg4 = 0, deg6plus = 0;
            Rational positive;
            for (const auto& [d, amount] : in) {
                if (d == 3) ++deg3;
                if (d == 4) ++deg4;
                if (d >= 6) ++deg6plus;
                if (amount > Rational(0)) positive += amount;
            }
            if (deg3 > 2) {
                out.push_back({g, a, "more than two degree-3 trim preimages"});
            }
            if (deg4 > 3) {
                out.push_back({g, a, "more than three degree-4 trim preimages"});
            }
            if (Rational(3) + positive >= Rational(10) && deg6plus == 0) {
                out.push_back({g, a,
                               "positive charge reaches 10 without a degree >= 6 preimage"});
            }
        }
    }
    return out;
}

QuarterMoveResult quarter_move(const ChargeLedger& ledger, const RectangulationSet& rset) {
    if (ledger.stage != ChargeLedger::Stage::AfterTrimMove) {
        throw std::logic_error("quarter_move: ledger must be after the trim move");
    }
    QuarterMoveResult res;
    res.ledger = ledger;
    res.ledger.stage = ChargeLedger::Stage::AfterQuarterMove;
    const int n = rset.config.n();
    const int m = static_cast<int>(rset.members.size());
    const Rational nine(9), quarter(1, 4), eight(8);

    // The donor set is fixed by the after-trim charges before any transfer.
    // Transfers are performed exactly as the scheme prescribes; failed side
    // conditions are recorded as witnesses, never used to clamp or skip a
    // transfer. A transfer is impossible only when the endpoint rests on B
    // (no host to flip).
    for (int g = 0; g < m; ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= n; ++a) {
            if (ledger.entries[g][a - 1] != nine || degree(r, a) != 2) continue;

            DonorRecord donor;
            donor.member = g;
            donor.point = a;
            const int l = left_extendability(r, a);
            const int rr = right_extendability(r, a);
            if (l != 2 || rr != 2) {
                res.violations.push_back(
                    {g, a,
                     "charge-9 segment with l=" + std::to_string(l) + " r=" +
                         std::to_string(rr) + " (expected 2/2)"});
            }
            const Segment& s = r.seg(a);
            if (s.low.is_wall() || s.high.is_wall()) {
                res.violations.push_back({g, a, "charge-9 segment endpoint on B"});
                continue;
            }
            donor.right_host = s.high.point;
            donor.left_host = s.low.point;

            for (int side = 0; side < 2; ++side) {
                const int host = side == 0 ? donor.right_host : donor.left_host;
                Rectangulation flipped = flip(r, host);
                const int idx = rset.find(canonical_key(flipped));
                if (idx < 0) {
                    throw std::logic_error(
                        "quarter_move: flip target missing from R(P); the enumeration is "
                        "incomplete");
                }
                if (degree(rset.members[idx], a) != 2) {
                    res.violations.push_back(
                        {g, a, "flip target segment does not have degree 2"});
                }
                const Rational before = ledger.entries[idx][a - 1];
                if (before > eight) {
                    res.violations.push_back(
                        {g, a,
                         "flip target holds " + before.str() +
                             " (> 8) before the quarter move"});
                }
                const int tl = left_extendability(rset.members[idx], a);
                const int tr = right_extendability(rset.members[idx], a);
                if (side == 0) {
                    donor.target_right = idx;
                    donor.target_right_l = tl;
                    donor.target_right_r = tr;
                    donor.target_right_charge = before;
                } else {
                    donor.target_left = idx;
                    donor.target_left_l = tl;
                    donor.target_left_r = tr;
                    donor.target_left_charge = before;
                }
                res.ledger.entries[g][a - 1] -= quarter;
                res.ledger.entries[idx][a - 1] += quarter;
                res.ledger.quarter_transfers.push_back({g, idx, a});
            }
            res.donors.push_back(donor);
        }
    }
    return res;
}

std::vector<std::pair<int, int>> nonzero_on_higher_degree(const ChargeLedger& ledger,
                                                          const RectangulationSet& rset) {
    std::vector<std::pair<int, int>> out;
    for (int g = 0; g < static_cast<int>(rset.members.size()); ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= r.n(); ++a) {
            if (ledger.entries[g][a - 1] != Rational(0) && degree(r, a) != 2) {
                out.emplace_back(g, a);
            }
        }
    }
    return out;
}

MaxCharge max_degree2_charge(const ChargeLedger& ledger, const RectangulationSet& rset) {
    MaxCharge mc;
    bool first = true;
    for (int g = 0; g < static_cast<int>(rset.members.size()); ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= r.n(); ++a) {
            if (degree(r, a) != 2) continue;
            const Rational& c = ledger.entries[g][a - 1];
            if (first || c > mc.value) {
                mc = MaxCharge{c, g, a};
                first = false;
            }
        }
    }
    return mc;
}

ChargeReport charge_report(const ChargeLedger& ledger, const RectangulationSet& rset) {
    ChargeReport rep;
    rep.total_c = ledger.total();
    const int n = rset.config.n();

    bool first = true;
    for (const Rectangulation& r : rset.members) {
        Rational sum;
        for (int a = 1; a <= n; ++a) sum += Rational(5 - degree(r, a));
        if (first || sum < rep.per_rect_min_initial_sum) rep.per_rect_min_initial_sum = sum;
        first = false;
    }

    const MaxCharge mc = max_degree2_charge(ledger, rset);
    rep.max_degree2 = mc.value;
    if (mc.member >= 0) {
        rep.max_witness_key = rset.keys[mc.member];
        rep.max_witness_point = mc.point;
    }

    long long d2_sum = 0;
    for (int g = 0; g < static_cast<int>(rset.members.size()); ++g) {
        const Rectangulation& r = rset.members[g];
        for (int a = 1; a <= n; ++a) {
            if (degree(r, a) != 2) continue;
            ++d2_sum;
            ++rep.degree2_histogram[ledger.entries[g][a - 1].str()];
        }
    }

    if (n > 0 && rset.rc() > 0) {
        rep.exact_dhat2 = Rational(d2_sum, rset.rc());
        if (rep.max_degree2 > Rational(0)) {
            rep.implied_dhat2_lower =
                Rational(n) * Rational(rep.max_degree2.den(), rep.max_degree2.num());
        }
        const Rational c_lower = Rational(n) * Rational(rset.rc());
        const Rational c_upper = rep.max_degree2 * Rational(d2_sum);
        rep.chain_ok = c_lower <= rep.total_c && rep.total_c <= c_upper;
    } else {
        rep.chain_ok = true;
    }
    return rep;
}

std::string ledger_csv(const ChargeLedger& ledger, const RectangulationSet& rset) {
    std::string stage;
    switch (ledger.stage) {
        case ChargeLedger::Stage::Initial: stage = "initial"; break;
        case ChargeLedger::Stage::AfterTrimMove: stage = "afterTrimMove"; break;
        case ChargeLedger::Stage::AfterQuarterMove: stage = "afterQuarterMove"; break;
    }
    std::string out = "rectKey,point,stage,charge\n";
    for (int g = 0; g < static_cast<int>(rset.members.size()); ++g) {
        for (int a = 1; a <= rset.config.n(); ++a) {
            out += "\"" + rset.keys[g] + "\"," + std::to_string(a) + "," + stage + "," +
                   ledger.entries[g][a - 1].str() + "\n";
        }
    }
    return out;
}

}  // namespace rect
