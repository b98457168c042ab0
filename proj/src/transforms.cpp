#include "rect/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace rect {

namespace {

int along_coord(const PointConfig& cfg, Orientation host_o, int guest) {
    return host_o == Orientation::H ? cfg.x_of(guest) : cfg.y_of(guest);
}

int own_coord(const PointConfig& cfg, Orientation o, int p) {
    return o == Orientation::H ? cfg.x_of(p) : cfg.y_of(p);
}

// Nearest blocker for a segment moving along the line `line`: among the
// segments of orientation host_o whose extent strictly contains `line`,
// the one with cross coordinate nearest to `from` in the given direction.
// Falls back to the wall. Extents are taken from `segs` as passed, so a
// caller that already shortened a host sees the shortened extent.
StopperRef scan_stopper(const PointConfig& cfg, const std::vector<Segment>& segs,
                        Orientation host_o, int line, int from, bool increasing,
                        int skip_owner) {
    int best = 0;
    for (const Segment& s : segs) {
        if (s.orientation != host_o || s.owner == skip_owner) continue;
        const Extent e = extent_of(cfg, s);
        if (!e.contains_open(line)) continue;
        if (increasing ? e.cross <= from : e.cross >= from) continue;
        if (best == 0) {
            best = s.owner;
        } else {
            const int prev = extent_of(cfg, segs[best - 1]).cross;
            if (increasing ? e.cross < prev : e.cross > prev) best = s.owner;
        }
    }
    if (best != 0) return StopperRef::on_segment(best);
    if (host_o == Orientation::H) {
        return StopperRef::on_wall(increasing ? Wall::Top : Wall::Bottom);
    }
    return StopperRef::on_wall(increasing ? Wall::Right : Wall::Left);
}

std::vector<IntersectionRef> guests_of(const Rectangulation& r, int a) {
    std::vector<IntersectionRef> out;
    for (const Segment& s : r.segments) {
        if (s.low.is_segment() && s.low.point == a) out.push_back({a, s.owner, false});
        if (s.high.is_segment() && s.high.point == a) out.push_back({a, s.owner, true});
    }
    return out;
}

}  // namespace

std::vector<IntersectionRef> segment_intersections(const Rectangulation& r) {
    std::vector<IntersectionRef> out;
    for (const Segment& s : r.segments) {
        if (s.low.is_segment()) out.push_back({s.low.point, s.owner, false});
        if (s.high.is_segment()) out.push_back({s.high.point, s.owner, true});
    }
    return out;
}

Rectangulation flip(const Rectangulation& r, int a) {
    if (a < 1 || a > r.n()) throw std::out_of_range("flip: bad point index");
    const Orientation o_old = r.seg(a).orientation;
    const Orientation o_new = perpendicular(o_old);
    const PointConfig& cfg = r.config;

    Rectangulation out = r;
    // Every mover (the orphaned guests and the reoriented segment) is
    // perpendicular to the old segment and stops only against the
    // unchanged segments parallel to it, so scans run against `r` minus a.
    for (const IntersectionRef& t : guests_of(r, a)) {
        const int line = along_coord(cfg, o_old, t.guest);
        const int from = own_coord(cfg, o_old == Orientation::H ? Orientation::V
                                                                : Orientation::H,
                                   a);
        StopperRef st = scan_stopper(cfg, r.segments, o_old, line, from, t.high_end, a);
        if (t.high_end) out.seg(t.guest).high = st;
        else out.seg(t.guest).low = st;
    }
    const int line = own_coord(cfg, o_new == Orientation::H ? Orientation::V
                                                            : Orientation::H,
                               a);
    const int from = own_coord(cfg, o_new, a);
    Segment ns;
    ns.owner = a;
    ns.orientation = o_new;
    ns.low = scan_stopper(cfg, r.segments, o_old, line, from, false, a);
    ns.high = scan_stopper(cfg, r.segments, o_old, line, from, true, a);
    out.seg(a) = ns;
    return out;
}

RotationOutcome rotate(const Rectangulation& r, const IntersectionRef& t) {
    const PointConfig& cfg = r.config;
    if (t.host < 1 || t.host > r.n() || t.guest < 1 || t.guest > r.n()) {
        throw std::invalid_argument("rotate: bad point index");
    }
    const Segment& gs = r.seg(t.guest);
    const StopperRef& st = t.high_end ? gs.high : gs.low;
    if (!st.is_segment() || st.point != t.host) {
        throw std::invalid_argument("rotate: t is not an intersection of this rectangulation");
    }
    const Segment& hs = r.seg(t.host);
    const Orientation ho = hs.orientation;
    const int cut = along_coord(cfg, ho, t.guest);
    const int host_pos = own_coord(cfg, ho, t.host);
    const bool cut_high = cut > host_pos;

    // foreign endpoints on the removed open portion make the rotation
    // non-valid
    RotationOutcome outcome;
    for (const IntersectionRef& g : guests_of(r, t.host)) {
        if (g.guest == t.guest && g.high_end == t.high_end) continue;
        const int c = along_coord(cfg, ho, g.guest);
        if (cut_high ? c > cut : c < cut) outcome.orphaned.push_back(g);
    }
    if (!outcome.orphaned.empty()) return outcome;

    Rectangulation out = r;
    if (cut_high) out.seg(t.host).high = StopperRef::on_segment(t.guest);
    else out.seg(t.host).low = StopperRef::on_segment(t.guest);

    // the guest extends through t; the shortened host no longer strictly
    // contains the guest's line, so it cannot re-block
    const int line = cut;
    const int from = own_coord(cfg, ho == Orientation::H ? Orientation::V : Orientation::H,
                               t.host);
    StopperRef moved = scan_stopper(cfg, out.segments, ho, line, from, t.high_end, 0);
    if (t.high_end) out.seg(t.guest).high = moved;
    else out.seg(t.guest).low = moved;

    outcome.result = std::move(out);
    return outcome;
}

TrimResult trim(const Rectangulation& r, int a) {
    if (a < 1 || a > r.n()) throw std::out_of_range("trim: bad point index");
    TrimResult res;
    res.rect = r;
    const PointConfig& cfg = r.config;
    for (;;) {
        const Orientation o = res.rect.seg(a).orientation;
        std::vector<IntersectionRef> guests = guests_of(res.rect, a);
        if (guests.empty()) break;
        const int a_pos = own_coord(cfg, o, a);
        auto coord = [&](const IntersectionRef& g) { return along_coord(cfg, o, g.guest); };
        IntersectionRef pick = guests.front();
        for (const IntersectionRef& g : guests) {
            if (coord(g) > coord(pick)) pick = g;
        }
        if (coord(pick) < a_pos) {
            // every foreign intersection is on the low side; take the lowest
            for (const IntersectionRef& g : guests) {
                if (coord(g) < coord(pick)) pick = g;
            }
        }
        const int before = degree(res.rect, a);
        RotationOutcome step = rotate(res.rect, pick);
        if (!step.valid()) {
            throw std::logic_error("trim: selected rotation must be valid");
        }
        if (degree(*step.result, a) != before - 1) {
            throw std::logic_error("trim: rotation must drop the degree by exactly 1");
        }
        res.rect = std::move(*step.result);
        res.trace.push_back(pick);
    }
    return res;
}

namespace {

int extendability(const Rectangulation& r, int a, bool high) {
    Rectangulation cur = r;
    int k = 0;
    for (;;) {
        const StopperRef st = high ? cur.seg(a).high : cur.seg(a).low;
        if (st.is_wall()) break;
        RotationOutcome step = rotate(cur, IntersectionRef{st.point, a, high});
        if (!step.valid()) break;
        cur = std::move(*step.result);
        ++k;
    }
    return k;
}

}  // namespace

int left_extendability(const Rectangulation& r, int a) { return extendability(r, a, false); }
int right_extendability(const Rectangulation& r, int a) { return extendability(r, a, true); }

Rectangulation insert_point(const Rectangulation& r, int pos, int rank, Orientation o) {
    const int n_old = r.n();
    const int n_new = n_old + 1;
    if (pos < 1 || pos > n_new || rank < 1 || rank > n_new) {
        throw std::out_of_range("insert_point: position or rank out of range");
    }
    Rectangulation out;
    out.config.perm.assign(n_new, 0);
    out.config.perm[pos - 1] = rank;
    auto new_index = [pos](int i) { return i < pos ? i : i + 1; };
    for (int i = 1; i <= n_old; ++i) {
        const int y = r.config.perm[i - 1];
        out.config.perm[new_index(i) - 1] = y < rank ? y : y + 1;
    }
    out.segments.resize(n_new);
    for (int i = 1; i <= n_old; ++i) {
        Segment s = r.seg(i);
        s.owner = new_index(i);
        if (s.low.is_segment()) s.low.point = new_index(s.low.point);
        if (s.high.is_segment()) s.high.point = new_index(s.high.point);
        out.seg(s.owner) = s;
    }
    // the face containing the new point is bounded by the nearest
    // perpendicular segments whose extents strictly span its coordinates
    Segment ns;
    ns.owner = pos;
    ns.orientation = o;
    ns.low = StopperRef::on_wall(o == Orientation::H ? Wall::Left : Wall::Bottom);
    ns.high = StopperRef::on_wall(o == Orientation::H ? Wall::Right : Wall::Top);
    out.seg(pos) = ns;  // placeholder so the slot is well-formed during scans
    const Orientation host_o = perpendicular(o);
    const int line = o == Orientation::H ? rank : pos;
    const int from = o == Orientation::H ? pos : rank;
    ns.low = scan_stopper(out.config, out.segments, host_o, line, from, false, pos);
    ns.high = scan_stopper(out.config, out.segments, host_o, line, from, true, pos);
    out.seg(pos) = ns;
    return out;
}

std::optional<RemoveResult> remove_point(const Rectangulation& r, int q) {
    if (q < 1 || q > r.n()) throw std::out_of_range("remove_point: bad point index");
    if (degree(r, q) != 2) return std::nullopt;
    const int n_old = r.n();
    RemoveResult res;
    res.removed_orientation = r.seg(q).orientation;
    res.rest.config.perm.reserve(n_old - 1);
    const int q_rank = r.config.perm[q - 1];
    for (int i = 1; i <= n_old; ++i) {
        if (i == q) continue;
        const int y = r.config.perm[i - 1];
        res.rest.config.perm.push_back(y < q_rank ? y : y - 1);
    }
    auto new_index = [q](int i) { return i < q ? i : i - 1; };
    res.rest.segments.resize(n_old - 1);
    for (int i = 1; i <= n_old; ++i) {
        if (i == q) continue;
        Segment s = r.seg(i);
        s.owner = new_index(i);
        // degree(q) == 2 means no segment rests on q
        if (s.low.is_segment()) s.low.point = new_index(s.low.point);
        if (s.high.is_segment()) s.high.point = new_index(s.high.point);
        res.rest.seg(s.owner) = s;
    }
    return res;
}

}  // namespace rect
