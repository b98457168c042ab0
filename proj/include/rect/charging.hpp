#pragma once

#include <map>
#include <string>
#include <vector>

#include "rect/enumerate.hpp"
#include "rect/rational.hpp"

namespace rect {

// Exact-rational charge per (rectangulation, point) pair over the whole of
// R(P), with full transfer provenance so the transport graph is
// reconstructible.
struct ChargeLedger {
    enum class Stage { Initial, AfterTrimMove, AfterQuarterMove };

    Stage stage = Stage::Initial;
    std::vector<std::vector<Rational>> entries;  // [member][point-1]

    struct TrimTransfer {
        int from = 0;           // source member index
        int to = 0;             // trim target member index
        int point = 0;          // the trimmed segment's owner
        Rational amount;        // 5 - source degree (may be <= 0)
        int source_degree = 0;
    };
    std::vector<TrimTransfer> trim_transfers;

    struct QuarterTransfer {
        int donor = 0;     // member index of the charge-9 segment
        int receiver = 0;  // member index of the flip target
        int point = 0;
    };
    std::vector<QuarterTransfer> quarter_transfers;

    Rational total() const;
};

// stage Initial: charge of (G, a) is 5 - degree(a in G)
ChargeLedger initial_charges(const RectangulationSet& rset);

// Moves the entire charge of every degree > 2 segment to its trim target.
// Requires R(P) complete: a trim target missing from the set is an
// enumerator bug and throws std::logic_error. Trims run in parallel
// against the read-only set; transfers are applied in member order, so the
// result is identical for any worker count.
ChargeLedger move_to_trimmed(const ChargeLedger& ledger, const RectangulationSet& rset,
                             int workers = 1);

// sourceDegree -> number of trim preimages of (member, point)
std::map<int, int> trim_preimage_profile(const ChargeLedger& ledger, int member, int point);

struct ProfileViolation {
    int member = 0;
    int point = 0;
    std::string what;
};

// The structural claims behind the charge-9 cap: at most two degree-3 and
// three degree-4 preimages per segment, and any segment whose own 3 plus
// positive inflow reaches 10 has a degree >= 6 preimage.
std::vector<ProfileViolation> check_preimage_profiles(const ChargeLedger& ledger,
                                                      const RectangulationSet& rset);

// observed l/r of the flip targets; the bound itself only needs their
// pre-move charge <= 8, which is asserted, so these are recorded data
struct DonorRecord {
    int member = 0;
    int point = 0;
    int right_host = 0;
    int left_host = 0;
    int target_right = 0;  // member index of flip(G, right_host)
    int target_left = 0;
    int target_right_l = 0, target_right_r = 0;
    int target_left_l = 0, target_left_r = 0;
    Rational target_right_charge;  // before the quarter move
    Rational target_left_charge;
};

struct SchemeBViolation {
    int member = 0;
    int point = 0;
    std::string what;
};

struct QuarterMoveResult {
    ChargeLedger ledger;
    std::vector<DonorRecord> donors;
    std::vector<SchemeBViolation> violations;
};

// For every degree-2 segment holding exactly 9 after the trim move:
// requires l = r = 2, flips the segments hosting its two endpoints, checks
// both targets have degree 2 and pre-move charge at most 8, and moves 1/4
// to each. Violations are returned as witnesses, never clamped.
QuarterMoveResult quarter_move(const ChargeLedger& ledger, const RectangulationSet& rset);

// (member, point) pairs of degree > 2 carrying nonzero charge; must be
// empty after either moving stage
std::vector<std::pair<int, int>> nonzero_on_higher_degree(const ChargeLedger& ledger,
                                                          const RectangulationSet& rset);

struct MaxCharge {
    Rational value;
    int member = -1;
    int point = 0;
};

// maximum charge over degree-2 segments, with a witness
MaxCharge max_degree2_charge(const ChargeLedger& ledger, const RectangulationSet& rset);

struct ChargeReport {
    Rational total_c;
    Rational per_rect_min_initial_sum;          // min over G of sum_a (5 - deg)
    Rational max_degree2;                       // at the ledger's stage
    std::string max_witness_key;
    int max_witness_point = 0;
    std::map<std::string, int> degree2_histogram;  // charge string -> count
    Rational implied_dhat2_lower;               // n / max_degree2
    Rational exact_dhat2;
    bool chain_ok = false;  // n*rc <= C <= max * sum d2
};

ChargeReport charge_report(const ChargeLedger& ledger, const RectangulationSet& rset);

// CSV dump: rectKey,point,stage,charge
std::string ledger_csv(const ChargeLedger& ledger, const RectangulationSet& rset);

}  // namespace rect
