#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rect {

// A point set in general position, canonically realized: point i (1-based,
// sorted by x) sits at (i, perm[i]) inside B = [0, n+1] x [0, n+1]. All
// coordinates are exact integers; rectangulation combinatorics depend only
// on the two rank orders, so the permutation is the whole input.
struct PointConfig {
    std::vector<int> perm;  // perm[i-1] = y-rank of point i

    int n() const { return static_cast<int>(perm.size()); }
    int side() const { return n() + 1; }
    int x_of(int p) const { return p; }
    int y_of(int p) const { return perm[p - 1]; }

    bool operator==(const PointConfig& o) const { return perm == o.perm; }
};

// Throws std::invalid_argument on an empty sequence, duplicates, or
// out-of-range ranks.
PointConfig make_point_config(const std::vector<int>& perm);

enum class Orientation : std::uint8_t { H, V };

inline Orientation perpendicular(Orientation o) {
    return o == Orientation::H ? Orientation::V : Orientation::H;
}

enum class Wall : std::uint8_t { Left, Right, Bottom, Top };

// What a segment endpoint rests on: a wall of B or another point's segment.
struct StopperRef {
    enum class Kind : std::uint8_t { Wall, Segment };
    Kind kind;
    Wall wall;  // meaningful when kind == Wall
    int point;  // meaningful when kind == Segment; 1-based

    static StopperRef on_wall(Wall w) { return StopperRef{Kind::Wall, w, 0}; }
    static StopperRef on_segment(int p) { return StopperRef{Kind::Segment, Wall::Left, p}; }

    bool is_wall() const { return kind == Kind::Wall; }
    bool is_segment() const { return kind == Kind::Segment; }

    bool operator==(const StopperRef& o) const {
        if (kind != o.kind) return false;
        return is_wall() ? wall == o.wall : point == o.point;
    }
};

struct Segment {
    int owner = 0;  // 1-based point index
    Orientation orientation = Orientation::H;
    StopperRef low;   // left for H, bottom for V
    StopperRef high;  // right for H, top for V

    bool operator==(const Segment& o) const {
        return owner == o.owner && orientation == o.orientation && low == o.low &&
               high == o.high;
    }
};

// Closed interval along the segment's axis plus the fixed cross coordinate.
struct Extent {
    int lo = 0;
    int hi = 0;
    int cross = 0;

    bool contains_open(int c) const { return lo < c && c < hi; }
};

struct Rectangulation {
    PointConfig config;
    std::vector<Segment> segments;  // segments[i-1] belongs to point i

    int n() const { return config.n(); }
    const Segment& seg(int p) const { return segments[p - 1]; }
    Segment& seg(int p) { return segments[p - 1]; }

    bool operator==(const Rectangulation& o) const {
        return config == o.config && segments == o.segments;
    }
};

// The extent endpoints are stopper coordinates, which are fixed point/wall
// coordinates, so this needs no other segment's state.
Extent extent_of(const PointConfig& config, const Segment& s);
inline Extent extent_of(const Rectangulation& r, int p) {
    return extent_of(r.config, r.seg(p));
}

enum class ViolationKind : std::uint8_t {
    // structural: the stopper reference itself is malformed
    StopperParallel,   // stopper segment not perpendicular to owner
    WallWrongAxis,     // e.g. horizontal segment claiming Wall(top)
    StopperWrongSide,  // stopper coordinate not on the claimed side of the owner
    BadStopperIndex,   // self-reference or out of range
    // geometric: well-formed references, inconsistent geometry
    EndpointNotInterior,   // endpoint outside the host's extent
    CoincidentEndpoints,   // endpoint exactly on the host's endpoint
    Crossing,              // two segments cross in their interiors
    FaceCountMismatch,     // subdivision does not have n+1 rectangular faces
    DegreeSumExceeded,     // sum of degrees > 4n
};

bool is_structural(ViolationKind k);
std::string violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int a = 0;  // offending point
    int b = 0;  // other involved point, 0 if none
    std::string detail;
};

// Full validator: every Rectangulation invariant, reported as an itemized
// list (empty iff valid). The face-count check runs only when everything
// pairwise is already clean, since faces are meaningless under crossings.
std::vector<Violation> validate(const Rectangulation& r);

// Same predicate as validate(r).empty(), answered at the first violation.
bool is_valid(const Rectangulation& r);

struct RealizeResult {
    std::optional<Rectangulation> rect;  // set iff violations is empty
    std::vector<Violation> violations;

    bool ok() const { return rect.has_value(); }
};

RealizeResult realize(const PointConfig& config,
                      const std::vector<Orientation>& orientations,
                      const std::vector<std::pair<StopperRef, StopperRef>>& stoppers);

// degree(a) = 2 + number of foreign endpoints strictly inside (a,.);
// computed from stopper references (each guest endpoint rests exactly on
// its declared stopper).
int degree(const Rectangulation& r, int a);
std::vector<int> all_degrees(const Rectangulation& r);

// j -> number of segments of degree j
std::map<int, int> degree_histogram(const Rectangulation& r);

// Injective over R(P) for a fixed config: the serialized JSON array of
// per-point records in x-rank order. Doubles as the wire form.
std::string canonical_key(const Rectangulation& r);

// Parses the canonical-key / wire form back. Field order inside records is
// free on input. Throws std::invalid_argument on malformed text.
Rectangulation parse_rectangulation(const PointConfig& config, const std::string& json);

std::string orientation_name(Orientation o);
std::string stopper_name(const StopperRef& s);

// Bounded faces of the induced subdivision, each verified to be a
// rectangle; counted over the unit-cell grid. Returns -1 if some face is
// not a rectangle.
int count_rect_faces(const Rectangulation& r);

// Number of segment endpoints resting on B.
int wall_endpoint_count(const Rectangulation& r);

}  // namespace rect
