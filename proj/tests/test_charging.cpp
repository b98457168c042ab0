#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "rect/charging.hpp"
#include "rect/enumerate.hpp"
#include "rect/transforms.hpp"

using namespace rect;

namespace {

int find_member(const RectangulationSet& set, const Rectangulation& r) {
    const int idx = set.find(canonical_key(r));
    REQUIRE(idx >= 0);
    return idx;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 4) == Rational(3, 4));
    CHECK(Rational(9) - Rational(1, 2) == Rational(17, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2) < Rational(0));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(10, 9) > Rational(19, 18));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("initial charges: n=1 gives every segment 3 units") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1}));
    ChargeLedger ledger = initial_charges(set);
    CHECK(ledger.total() == Rational(6));
    for (const auto& row : ledger.entries) {
        REQUIRE(row.size() == 1);
        CHECK(row[0] == Rational(3));
    }
    ChargeReport rep = charge_report(ledger, set);
    CHECK(rep.max_degree2 == Rational(3));
    CHECK(rep.per_rect_min_initial_sum == Rational(3));
    CHECK(rep.implied_dhat2_lower == Rational(1, 3));
    CHECK(rep.exact_dhat2 == Rational(1));
    CHECK(rep.chain_ok);
}

TEST_CASE("initial charges on the diagonal HV member are {2, 3}") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1, 2}));
    Rectangulation g;
    g.config = set.config;
    g.segments = {Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)},
                  Segment{2, Orientation::V, StopperRef::on_segment(1),
                          StopperRef::on_wall(Wall::Top)}};
    const int gi = find_member(set, g);
    ChargeLedger ledger = initial_charges(set);
    CHECK(ledger.entries[gi][0] == Rational(2));  // degree 3
    CHECK(ledger.entries[gi][1] == Rational(3));  // degree 2
}

TEST_CASE("pinwheel initial charges are all 2, summing to 8 >= 4") {
    RectangulationSet set = enumerate_backtracking(make_point_config({2, 4, 1, 3}));
    Rectangulation pw;
    pw.config = set.config;
    pw.segments = {
        Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left), StopperRef::on_segment(3)},
        Segment{2, Orientation::V, StopperRef::on_segment(1), StopperRef::on_wall(Wall::Top)},
        Segment{3, Orientation::V, StopperRef::on_wall(Wall::Bottom), StopperRef::on_segment(4)},
        Segment{4, Orientation::H, StopperRef::on_segment(2), StopperRef::on_wall(Wall::Right)}};
    const int gi = find_member(set, pw);
    ChargeLedger ledger = initial_charges(set);
    Rational sum;
    for (int a = 1; a <= 4; ++a) {
        CHECK(ledger.entries[gi][a - 1] == Rational(2));
        sum += ledger.entries[gi][a - 1];
    }
    CHECK(sum == Rational(8));
}

TEST_CASE("trim move on the n=2 diagonal transports the documented charge") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1, 2}));
    ChargeLedger initial = initial_charges(set);
    ChargeLedger trimmed = move_to_trimmed(initial, set);

    CHECK(trimmed.total() == initial.total());
    CHECK(nonzero_on_higher_degree(trimmed, set).empty());

    // (p1, G_i) holds 2 and moves it onto (p1, G_ii) where p1 has degree 2
    Rectangulation gi;
    gi.config = set.config;
    gi.segments = {Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left),
                           StopperRef::on_wall(Wall::Right)},
                   Segment{2, Orientation::V, StopperRef::on_segment(1),
                           StopperRef::on_wall(Wall::Top)}};
    Rectangulation gii;
    gii.config = set.config;
    gii.segments = {Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left),
                            StopperRef::on_segment(2)},
                    Segment{2, Orientation::V, StopperRef::on_wall(Wall::Bottom),
                            StopperRef::on_wall(Wall::Top)}};
    const int i = find_member(set, gi);
    const int ii = find_member(set, gii);
    CHECK(trimmed.entries[i][0] == Rational(0));
    CHECK(trimmed.entries[ii][0] == Rational(5));  // own 3 + received 2
    CHECK(trim_preimage_profile(trimmed, ii, 1) == std::map<int, int>{{3, 1}});

    // a degree-2 segment keeps its own 3; (G_i, p2) also receives 2 from
    // its single degree-3 preimage
    CHECK(trimmed.entries[i][1] == Rational(5));
    CHECK(trim_preimage_profile(trimmed, i, 2) == std::map<int, int>{{3, 1}});
}

TEST_CASE("profile checks pass for every permutation with n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& perm : all_perms(n)) {
            RectangulationSet set = enumerate_backtracking(PointConfig{perm});
            ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
            CHECK(check_preimage_profiles(trimmed, set).empty());
        }
    }
}

TEST_CASE("after-trim maximum is exactly 9 on the n=4 diagonal") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1, 2, 3, 4}));
    ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
    MaxCharge mc = max_degree2_charge(trimmed, set);
    CHECK(mc.value == Rational(9));

    // the witness: p3 vertical between the wall-to-wall horizontals y=2, y=4
    Rectangulation w;
    w.config = set.config;
    w.segments = {Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)},
                  Segment{2, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)},
                  Segment{3, Orientation::V, StopperRef::on_segment(2),
                          StopperRef::on_segment(4)},
                  Segment{4, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)}};
    const int wi = find_member(set, w);
    CHECK(trimmed.entries[wi][2] == Rational(9));
    CHECK(trim_preimage_profile(trimmed, wi, 3) ==
          std::map<int, int>{{3, 2}, {4, 2}, {5, 1}});
    // the 9 is reached with one extension chain stopped by B after a single
    // step, not by the 10-minus-1 route
    CHECK(left_extendability(set.members[wi], 3) == 2);
    CHECK(right_extendability(set.members[wi], 3) == 1);
}

TEST_CASE("quarter move transfers faithfully and surfaces the lemma violations") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1, 2, 3, 4}));
    ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
    QuarterMoveResult qm = quarter_move(trimmed, set);

    CHECK(qm.ledger.total() == trimmed.total());
    CHECK(nonzero_on_higher_degree(qm.ledger, set).empty());
    CHECK(!qm.donors.empty());
    // the transfers happen even though the donors fail the l=r=2 claim
    CHECK(!qm.violations.empty());
    for (const DonorRecord& d : qm.donors) {
        CHECK(qm.ledger.entries[d.member][d.point - 1] <= Rational(17, 2));
        // flip targets all have degree 2
        CHECK(degree(set.members[d.target_right], d.point) == 2);
        CHECK(degree(set.members[d.target_left], d.point) == 2);
    }
    // at n=4 no donor receives, so the final maximum is exactly 17/2
    MaxCharge mc = max_degree2_charge(qm.ledger, set);
    CHECK(mc.value == Rational(17, 2));
}

TEST_CASE("n=5 witness: a receiver collects three quarters and ends at 35/4") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1, 2, 3, 5, 4}));
    ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
    QuarterMoveResult qm = quarter_move(trimmed, set);

    CHECK(qm.ledger.total() == trimmed.total());
    MaxCharge mc = max_degree2_charge(qm.ledger, set);
    CHECK(mc.value == Rational(35, 4));

    // the receiver: p2, p3, p5 vertical between the wall-to-wall
    // horizontals p1 and p4; it held 8 after the trim move
    Rectangulation w;
    w.config = set.config;
    w.segments = {Segment{1, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)},
                  Segment{2, Orientation::V, StopperRef::on_segment(1),
                          StopperRef::on_segment(4)},
                  Segment{3, Orientation::V, StopperRef::on_segment(1),
                          StopperRef::on_segment(4)},
                  Segment{4, Orientation::H, StopperRef::on_wall(Wall::Left),
                          StopperRef::on_wall(Wall::Right)},
                  Segment{5, Orientation::V, StopperRef::on_segment(1),
                          StopperRef::on_segment(4)}};
    const int wi = find_member(set, w);
    CHECK(mc.member == wi);
    CHECK(mc.point == 5);
    CHECK(trimmed.entries[wi][4] == Rational(8));
    int quarters = 0;
    for (const auto& t : qm.ledger.quarter_transfers) {
        if (t.receiver == wi && t.point == 5) ++quarters;
    }
    CHECK(quarters == 3);
}

TEST_CASE("donor-to-donor transfers occur somewhere at n=5") {
    bool found = false;
    for (const auto& perm : all_perms(5)) {
        RectangulationSet set = enumerate_backtracking(PointConfig{perm});
        ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
        QuarterMoveResult qm = quarter_move(trimmed, set);
        for (const auto& t : qm.ledger.quarter_transfers) {
            if (trimmed.entries[t.receiver][t.point - 1] == Rational(9)) {
                found = true;
                break;
            }
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("conservation and degree-2 concentration over every n <= 3 config") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& perm : all_perms(n)) {
            RectangulationSet set = enumerate_backtracking(PointConfig{perm});
            ChargeLedger initial = initial_charges(set);
            ChargeLedger trimmed = move_to_trimmed(initial, set);
            QuarterMoveResult qm = quarter_move(trimmed, set);
            CHECK(initial.total() == trimmed.total());
            CHECK(initial.total() == qm.ledger.total());
            CHECK(nonzero_on_higher_degree(trimmed, set).empty());
            CHECK(nonzero_on_higher_degree(qm.ledger, set).empty());
            // no donors at n <= 3: the stage is unchanged
            CHECK(qm.donors.empty());
            CHECK(qm.ledger.entries == trimmed.entries);
        }
    }
}

TEST_CASE("chain inequality holds at both moving stages for n <= 4") {
    // n * rc(P) <= C <= maxCharge * sum of d2 over R(P)
    for (int n = 1; n <= 4; ++n) {
        for (const auto& perm : all_perms(n)) {
            RectangulationSet set = enumerate_backtracking(PointConfig{perm});
            ChargeLedger trimmed = move_to_trimmed(initial_charges(set), set);
            CHECK(charge_report(trimmed, set).chain_ok);
            QuarterMoveResult qm = quarter_move(trimmed, set);
            CHECK(charge_report(qm.ledger, set).chain_ok);
        }
    }
}

TEST_CASE("ledger csv lists every entry at the right stage") {
    RectangulationSet set = enumerate_backtracking(make_point_config({1}));
    ChargeLedger ledger = initial_charges(set);
    const std::string csv = ledger_csv(ledger, set);
    CHECK(csv.find("rectKey,point,stage,charge") == 0);
    CHECK(csv.find(",1,initial,3") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
}
