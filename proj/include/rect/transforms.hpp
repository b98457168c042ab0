#pragma once

#include <optional>
#include <vector>

#include "rect/model.hpp"

namespace rect {

// An intersection: the named endpoint of guest rests strictly inside the
// perpendicular host's extent.
struct IntersectionRef {
    int host = 0;
    int guest = 0;
    bool high_end = false;  // which endpoint of the guest

    bool operator==(const IntersectionRef& o) const {
        return host == o.host && guest == o.guest && high_end == o.high_end;
    }
};

// All endpoint-on-segment incidences of r, in (host, guest) order.
std::vector<IntersectionRef> segment_intersections(const Rectangulation& r);

// Reorient (a,.): remove the segment, extend every segment that rested on
// it until it meets a remaining segment or B, then extend the new
// perpendicular segment through a both ways. All moving segments are
// parallel, so the result is order-independent.
Rectangulation flip(const Rectangulation& r, int a);

struct RotationOutcome {
    std::optional<Rectangulation> result;  // set iff the rotation is valid
    std::vector<IntersectionRef> orphaned; // endpoints on the removed portion

    bool valid() const { return result.has_value(); }
};

// Shorten the host at t so t becomes its endpoint (cutting the side that
// does not contain the host's own point) and extend the guest through t
// until it hits another segment or B. Non-valid exactly when a foreign
// endpoint lay on the removed open portion.
// Throws std::invalid_argument if t is not an intersection of r.
RotationOutcome rotate(const Rectangulation& r, const IntersectionRef& t);

struct TrimResult {
    Rectangulation rect;
    std::vector<IntersectionRef> trace;  // rotations applied, in order
};

// Deterministic sequence of valid rotations reducing (a,.) to degree 2:
// take the highest foreign intersection on (a,.); if it is strictly on the
// high side of a, rotate it, otherwise rotate the lowest one. Each step is
// valid by construction and drops degree(a) by exactly one.
TrimResult trim(const Rectangulation& r, int a);

// Number of successive valid rotations of the low (resp. high) endpoint of
// (a,.), with (a,.) as the guest; stops at B or at the first non-valid
// rotation. "Left/right" read as "bottom/top" for vertical segments.
int left_extendability(const Rectangulation& r, int a);
int right_extendability(const Rectangulation& r, int a);

// Insert a new point at x-position pos and y-rank rank (both 1-based, in
// the extended config's coordinates) carrying a segment of the given
// orientation, maximal inside the face it lands in. The new segment has
// degree 2 and every other segment is unchanged.
Rectangulation insert_point(const Rectangulation& r, int pos, int rank, Orientation o);

struct RemoveResult {
    Rectangulation rest;
    Orientation removed_orientation;
};

// Inverse of insert_point; only degree-2 points are removable (nullopt
// otherwise).
std::optional<RemoveResult> remove_point(const Rectangulation& r, int q);

}  // namespace rect
