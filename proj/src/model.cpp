#include "rect/model.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace rect {

PointConfig make_point_config(const std::vector<int>& perm) {
    if (perm.empty()) throw std::invalid_argument("permutation must be nonempty");
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("rank " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
        }
        if (seen[v]) throw std::invalid_argument("duplicate rank " + std::to_string(v));
        seen[v] = true;
    }
    return PointConfig{perm};
}

Extent extent_of(const PointConfig& config, const Segment& s) {
    Extent e;
    if (s.orientation == Orientation::H) {
        e.cross = config.y_of(s.owner);
        e.lo = s.low.is_wall() ? 0 : config.x_of(s.low.point);
        e.hi = s.high.is_wall() ? config.side() : config.x_of(s.high.point);
    } else {
        e.cross = config.x_of(s.owner);
        e.lo = s.low.is_wall() ? 0 : config.y_of(s.low.point);
        e.hi = s.high.is_wall() ? config.side() : config.y_of(s.high.point);
    }
    return e;
}

bool is_structural(ViolationKind k) {
    switch (k) {
        case ViolationKind::StopperParallel:
        case ViolationKind::WallWrongAxis:
        case ViolationKind::StopperWrongSide:
        case ViolationKind::BadStopperIndex:
            return true;
        default:
            return false;
    }
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::StopperParallel: return "stopper-parallel";
        case ViolationKind::WallWrongAxis: return "wall-wrong-axis";
        case ViolationKind::StopperWrongSide: return "stopper-wrong-side";
        case ViolationKind::BadStopperIndex: return "bad-stopper-index";
        case ViolationKind::EndpointNotInterior: return "endpoint-not-interior";
        case ViolationKind::CoincidentEndpoints: return "coincident-endpoints";
        case ViolationKind::Crossing: return "crossing";
        case ViolationKind::FaceCountMismatch: return "face-count-mismatch";
        case ViolationKind::DegreeSumExceeded: return "degree-sum-exceeded";
    }
    return "?";
}

namespace {

// Along-axis coordinate of a point on a perpendicular host: for a
// horizontal host that is the guest's x, for a vertical host the guest's y.
int along_coord(const PointConfig& config, Orientation host_orientation, int guest) {
    return host_orientation == Orientation::H ? config.x_of(guest) : config.y_of(guest);
}

std::optional<Violation> check_stopper(const Rectangulation& r,
                                       const std::vector<Extent>& exts, int a,
                                       const StopperRef& st, bool is_high) {
    const PointConfig& cfg = r.config;
    const Segment& s = r.seg(a);
    if (st.is_wall()) {
        Wall expect;
        if (s.orientation == Orientation::H) expect = is_high ? Wall::Right : Wall::Left;
        else expect = is_high ? Wall::Top : Wall::Bottom;
        if (st.wall != expect) {
            return Violation{ViolationKind::WallWrongAxis, a, 0,
                             std::string(is_high ? "high" : "low") + " wall side mismatch"};
        }
        return std::nullopt;
    }
    const int q = st.point;
    if (q < 1 || q > cfg.n() || q == a) {
        return Violation{ViolationKind::BadStopperIndex, a, q, ""};
    }
    // side check uses only coordinates, valid even before q's segment is known
    const int own = s.orientation == Orientation::H ? cfg.x_of(a) : cfg.y_of(a);
    const int sc = s.orientation == Orientation::H ? cfg.x_of(q) : cfg.y_of(q);
    if (is_high ? sc <= own : sc >= own) {
        return Violation{ViolationKind::StopperWrongSide, a, q,
                         std::string(is_high ? "high" : "low")};
    }
    const Segment& host = r.seg(q);
    if (host.orientation == s.orientation) {
        return Violation{ViolationKind::StopperParallel, a, q, ""};
    }
    const Extent& he = exts[q - 1];
    const int c = along_coord(cfg, host.orientation, a);
    if (c == he.lo || c == he.hi) {
        return Violation{ViolationKind::CoincidentEndpoints, a, q, ""};
    }
    if (!he.contains_open(c)) {
        return Violation{ViolationKind::EndpointNotInterior, a, q, ""};
    }
    return std::nullopt;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int count_rect_faces(const Rectangulation& r) {
    const int n = r.n();
    const int cells = n + 1;  // per axis: [i, i+1] for i in 0..n
    // wall[x][j]: a vertical segment at x separates cells (x-1,j) and (x,j)
    std::vector<std::vector<bool>> vblock(n + 1, std::vector<bool>(cells, false));
    std::vector<std::vector<bool>> hblock(n + 1, std::vector<bool>(cells, false));
    for (int p = 1; p <= n; ++p) {
        const Segment& s = r.seg(p);
        const Extent e = extent_of(r.config, s);
        if (s.orientation == Orientation::V) {
            for (int j = e.lo; j < e.hi; ++j) vblock[e.cross][j] = true;
        } else {
            for (int i = e.lo; i < e.hi; ++i) hblock[e.cross][i] = true;
        }
    }
    UnionFind uf(cells * cells);
    auto id = [cells](int i, int j) { return j * cells + i; };
    for (int j = 0; j < cells; ++j) {
        for (int i = 0; i < cells; ++i) {
            if (i + 1 < cells && !vblock[i + 1][j]) uf.unite(id(i, j), id(i + 1, j));
            if (j + 1 < cells && !hblock[j + 1][i]) uf.unite(id(i, j), id(i, j + 1));
        }
    }
    // gather per-component cell bounding boxes and sizes
    std::map<int, std::array<int, 5>> comps;  // root -> {minx, maxx, miny, maxy, count}
    for (int j = 0; j < cells; ++j) {
        for (int i = 0; i < cells; ++i) {
            int root = uf.find(id(i, j));
            auto it = comps.find(root);
            if (it == comps.end()) {
                comps[root] = {i, i, j, j, 1};
            } else {
                auto& bb = it->second;
                bb[0] = std::min(bb[0], i);
                bb[1] = std::max(bb[1], i);
                bb[2] = std::min(bb[2], j);
                bb[3] = std::max(bb[3], j);
                bb[4] += 1;
            }
        }
    }
    for (const auto& [root, bb] : comps) {
        if ((bb[1] - bb[0] + 1) * (bb[3] - bb[2] + 1) != bb[4]) return -1;
    }
    return static_cast<int>(comps.size());
}

int wall_endpoint_count(const Rectangulation& r) {
    int w = 0;
    for (const Segment& s : r.segments) {
        if (s.low.is_wall()) ++w;
        if (s.high.is_wall()) ++w;
    }
    return w;
}

namespace {

// Shared core of the validator: with `out` set it itemizes every
// violation, without it it answers at the first one. Both shapes run the
// same predicates in the same order, so is_valid(r) == validate(r).empty()
// always.
bool validate_impl(const Rectangulation& r, std::vector<Violation>* out) {
    const int n = r.n();
    std::vector<Extent> exts(n);
    for (int a = 1; a <= n; ++a) exts[a - 1] = extent_of(r.config, r.seg(a));

    bool clean = true;
    for (int a = 1; a <= n; ++a) {
        for (int end = 0; end < 2; ++end) {
            auto v = check_stopper(r, exts, a, end ? r.seg(a).high : r.seg(a).low,
                                   end != 0);
            if (v) {
                if (!out) return false;
                out->push_back(std::move(*v));
                clean = false;
            }
        }
    }
    // pairwise crossings: strict double containment of a horizontal and a
    // vertical extent. Touching at a declared stopper is not strict.
    for (int a = 1; a <= n; ++a) {
        if (r.seg(a).orientation != Orientation::H) continue;
        const Extent& ea = exts[a - 1];
        for (int b = 1; b <= n; ++b) {
            if (r.seg(b).orientation != Orientation::V) continue;
            const Extent& eb = exts[b - 1];
            if (ea.contains_open(eb.cross) && eb.contains_open(ea.cross)) {
                if (!out) return false;
                out->push_back({ViolationKind::Crossing, a, b, ""});
                clean = false;
            }
        }
    }
    // faces are meaningless under crossings or dangling endpoints
    if (!clean) return false;

    int degree_sum = 0;
    for (int a = 1; a <= n; ++a) degree_sum += degree(r, a);
    if (degree_sum > 4 * n) {
        if (!out) return false;
        out->push_back({ViolationKind::DegreeSumExceeded, 0, 0, std::to_string(degree_sum)});
        clean = false;
    }
    const int faces = count_rect_faces(r);
    if (faces != n + 1) {
        if (!out) return false;
        out->push_back({ViolationKind::FaceCountMismatch, 0, 0,
                        "faces=" + std::to_string(faces)});
        clean = false;
    }
    return clean;
}

}  // namespace

std::vector<Violation> validate(const Rectangulation& r) {
    std::vector<Violation> out;
    validate_impl(r, &out);
    return out;
}

bool is_valid(const Rectangulation& r) { return validate_impl(r, nullptr); }

RealizeResult realize(const PointConfig& config,
                      const std::vector<Orientation>& orientations,
                      const std::vector<std::pair<StopperRef, StopperRef>>& stoppers) {
    const int n = config.n();
    if (static_cast<int>(orientations.size()) != n ||
        static_cast<int>(stoppers.size()) != n) {
        throw std::invalid_argument("realize: need one orientation and stopper pair per point");
    }
    Rectangulation r;
    r.config = config;
    r.segments.resize(n);
    for (int a = 1; a <= n; ++a) {
        r.seg(a) = Segment{a, orientations[a - 1], stoppers[a - 1].first,
                           stoppers[a - 1].second};
    }
    RealizeResult res;
    res.violations = validate(r);
    if (res.violations.empty()) res.rect = std::move(r);
    return res;
}

int degree(const Rectangulation& r, int a) {
    if (a < 1 || a > r.n()) throw std::out_of_range("degree: bad point index");
    int d = 2;
    for (const Segment& s : r.segments) {
        if (s.low.is_segment() && s.low.point == a) ++d;
        if (s.high.is_segment() && s.high.point == a) ++d;
    }
    return d;
}

std::vector<int> all_degrees(const Rectangulation& r) {
    std::vector<int> d(r.n() + 1, 2);  // 1-based
    d[0] = 0;
    for (const Segment& s : r.segments) {
        if (s.low.is_segment()) ++d[s.low.point];
        if (s.high.is_segment()) ++d[s.high.point];
    }
    return d;
}

std::map<int, int> degree_histogram(const Rectangulation& r) {
    std::map<int, int> h;
    const std::vector<int> d = all_degrees(r);
    for (int a = 1; a <= r.n(); ++a) ++h[d[a]];
    return h;
}

std::string orientation_name(Orientation o) { return o == Orientation::H ? "H" : "V"; }

std::string stopper_name(const StopperRef& s) {
    if (s.is_segment()) return "seg:" + std::to_string(s.point);
    switch (s.wall) {
        case Wall::Left: return "wall:left";
        case Wall::Right: return "wall:right";
        case Wall::Bottom: return "wall:bottom";
        case Wall::Top: return "wall:top";
    }
    return "?";
}

std::string canonical_key(const Rectangulation& r) {
    std::string out = "[";
    for (int a = 1; a <= r.n(); ++a) {
        const Segment& s = r.seg(a);
        if (a > 1) out += ",";
        out += "{\"owner\":" + std::to_string(a);
        out += ",\"orientation\":\"" + orientation_name(s.orientation) + "\"";
        out += ",\"low\":\"" + stopper_name(s.low) + "\"";
        out += ",\"high\":\"" + stopper_name(s.high) + "\"}";
    }
    out += "]";
    return out;
}

namespace {

StopperRef parse_stopper(const std::string& text) {
    if (text == "wall:left") return StopperRef::on_wall(Wall::Left);
    if (text == "wall:right") return StopperRef::on_wall(Wall::Right);
    if (text == "wall:bottom") return StopperRef::on_wall(Wall::Bottom);
    if (text == "wall:top") return StopperRef::on_wall(Wall::Top);
    if (text.rfind("seg:", 0) == 0) {
        return StopperRef::on_segment(std::stoi(text.substr(4)));
    }
    throw std::invalid_argument("bad stopper ref: " + text);
}

}  // namespace

Rectangulation parse_rectangulation(const PointConfig& config, const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad rectangulation JSON: ") + e.what());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != config.n()) {
        throw std::invalid_argument("rectangulation JSON must be an array of n records");
    }
    Rectangulation r;
    r.config = config;
    r.segments.resize(config.n());
    std::vector<bool> seen(config.n() + 1, false);
    for (const auto& rec : j) {
        const int owner = rec.at("owner").get<int>();
        if (owner < 1 || owner > config.n() || seen[owner]) {
            throw std::invalid_argument("bad owner " + std::to_string(owner));
        }
        seen[owner] = true;
        const std::string ori = rec.at("orientation").get<std::string>();
        if (ori != "H" && ori != "V") throw std::invalid_argument("bad orientation " + ori);
        Segment s;
        s.owner = owner;
        s.orientation = ori == "H" ? Orientation::H : Orientation::V;
        s.low = parse_stopper(rec.at("low").get<std::string>());
        s.high = parse_stopper(rec.at("high").get<std::string>());
        r.seg(owner) = s;
    }
    return r;
}

}  // namespace rect
