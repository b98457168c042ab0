#include "rect/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "rect/transforms.hpp"

namespace rect {

namespace {

int effective_workers(int requested) {
#ifdef _OPENMP
    if (requested <= 0) return omp_get_max_threads();
    return requested;
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace

RectangulationSet RectangulationSet::build(const PointConfig& config,
                                           std::vector<Rectangulation> members) {
    RectangulationSet set;
    set.config = config;
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        order.emplace_back(canonical_key(members[i]), i);
    }
    std::sort(order.begin(), order.end());
    set.members.reserve(members.size());
    set.keys.reserve(members.size());
    for (auto& [key, i] : order) {
        set.index.emplace(key, static_cast<int>(set.members.size()));
        set.keys.push_back(std::move(key));
        set.members.push_back(std::move(members[i]));
    }
    if (set.index.size() != set.members.size()) {
        throw std::logic_error("duplicate canonical keys in rectangulation set");
    }
    return set;
}

namespace {

// Backtracking search state. Points are decided in x-rank order; a partial
// assignment dies as soon as two decided segments certainly conflict.
struct Searcher {
    const PointConfig& cfg;
    std::vector<Segment> segs;
    std::vector<Rectangulation>* out;

    explicit Searcher(const PointConfig& c, std::vector<Rectangulation>* o)
        : cfg(c), segs(c.n()), out(o) {}

    static int along(const PointConfig& cfg, Orientation host_o, int guest) {
        return host_o == Orientation::H ? cfg.x_of(guest) : cfg.y_of(guest);
    }

    void candidate_stoppers(int i, Orientation o, std::vector<StopperRef>& lows,
                            std::vector<StopperRef>& highs) const {
        lows.clear();
        highs.clear();
        const int n = cfg.n();
        if (o == Orientation::H) {
            lows.push_back(StopperRef::on_wall(Wall::Left));
            highs.push_back(StopperRef::on_wall(Wall::Right));
            for (int q = 1; q < i; ++q) lows.push_back(StopperRef::on_segment(q));
            for (int q = i + 1; q <= n; ++q) highs.push_back(StopperRef::on_segment(q));
        } else {
            lows.push_back(StopperRef::on_wall(Wall::Bottom));
            highs.push_back(StopperRef::on_wall(Wall::Top));
            for (int q = 1; q <= n; ++q) {
                if (q == i) continue;
                if (cfg.y_of(q) < cfg.y_of(i)) lows.push_back(StopperRef::on_segment(q));
                else highs.push_back(StopperRef::on_segment(q));
            }
        }
    }

    // all checks between point i and the already decided points 1..i-1
    bool consistent(int i) const {
        const Segment& si = segs[i - 1];
        const Extent ei = extent_of(cfg, si);
        for (int end = 0; end < 2; ++end) {
            const StopperRef& st = end ? si.high : si.low;
            if (!st.is_segment() || st.point > i) continue;
            const Segment& host = segs[st.point - 1];
            if (host.orientation == si.orientation) return false;
            const Extent he = extent_of(cfg, host);
            if (!he.contains_open(along(cfg, host.orientation, i))) return false;
        }
        for (int j = 1; j < i; ++j) {
            const Segment& sj = segs[j - 1];
            for (int end = 0; end < 2; ++end) {
                const StopperRef& st = end ? sj.high : sj.low;
                if (!st.is_segment() || st.point != i) continue;
                if (sj.orientation == si.orientation) return false;
                if (!ei.contains_open(along(cfg, si.orientation, j))) return false;
            }
            if (sj.orientation != si.orientation) {
                const Extent ej = extent_of(cfg, sj);
                const Extent& h = si.orientation == Orientation::H ? ei : ej;
                const Extent& v = si.orientation == Orientation::H ? ej : ei;
                if (h.contains_open(v.cross) && v.contains_open(h.cross)) return false;
            }
        }
        return true;
    }

    void dfs(int i) {
        const int n = cfg.n();
        if (i > n) {
            Rectangulation r{cfg, segs};
            if (is_valid(r)) out->push_back(std::move(r));
            return;
        }
        std::vector<StopperRef> lows, highs;
        for (Orientation o : {Orientation::H, Orientation::V}) {
            candidate_stoppers(i, o, lows, highs);
            for (const StopperRef& lo : lows) {
                for (const StopperRef& hi : highs) {
                    segs[i - 1] = Segment{i, o, lo, hi};
                    if (consistent(i)) dfs(i + 1);
                }
            }
        }
    }
};

}  // namespace

RectangulationSet enumerate_backtracking(const PointConfig& config,
                                         const EnumerateOptions& opts) {
    const int n = config.n();
    if (n > opts.max_n) {
        throw CeilingExceeded("enumerate: n=" + std::to_string(n) + " exceeds ceiling " +
                              std::to_string(opts.max_n));
    }
    if (n == 0) {
        return RectangulationSet::build(config, {Rectangulation{config, {}}});
    }

    // top-level branches: every assignment of point 1
    std::vector<Segment> branches;
    {
        Searcher probe(config, nullptr);
        std::vector<StopperRef> lows, highs;
        for (Orientation o : {Orientation::H, Orientation::V}) {
            probe.candidate_stoppers(1, o, lows, highs);
            for (const StopperRef& lo : lows) {
                for (const StopperRef& hi : highs) {
                    branches.push_back(Segment{1, o, lo, hi});
                }
            }
        }
    }

    const int nb = static_cast<int>(branches.size());
    std::vector<std::vector<Rectangulation>> buckets(nb);
    const int workers = effective_workers(opts.workers);
    (void)workers;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
#endif
    for (int b = 0; b < nb; ++b) {
        Searcher s(config, &buckets[b]);
        s.segs[0] = branches[b];
        if (s.consistent(1)) s.dfs(2);
    }

    std::vector<Rectangulation> all;
    for (auto& bucket : buckets) {
        for (auto& r : bucket) all.push_back(std::move(r));
    }
    return RectangulationSet::build(config, std::move(all));
}

namespace {

// product walk over the whole assignment space; no pruning at all, the
// full validator is the only acceptance predicate
void oracle_walk(Rectangulation& scratch, int i, std::vector<Rectangulation>& out) {
    const int n = scratch.n();
    if (i > n) {
        if (is_valid(scratch)) out.push_back(scratch);
        return;
    }
    for (Orientation o : {Orientation::H, Orientation::V}) {
        std::vector<StopperRef> lows, highs;
        lows.push_back(StopperRef::on_wall(o == Orientation::H ? Wall::Left : Wall::Bottom));
        highs.push_back(StopperRef::on_wall(o == Orientation::H ? Wall::Right : Wall::Top));
        for (int q = 1; q <= n; ++q) {
            if (q == i) continue;
            lows.push_back(StopperRef::on_segment(q));
            highs.push_back(StopperRef::on_segment(q));
        }
        for (const StopperRef& lo : lows) {
            for (const StopperRef& hi : highs) {
                scratch.seg(i) = Segment{i, o, lo, hi};
                oracle_walk(scratch, i + 1, out);
            }
        }
    }
}

}  // namespace

RectangulationSet enumerate_oracle(const PointConfig& config, const OracleOptions& opts) {
    const int n = config.n();
    if (n > opts.max_n) {
        throw CeilingExceeded("oracle: n=" + std::to_string(n) + " exceeds ceiling " +
                              std::to_string(opts.max_n));
    }
    if (n == 0) {
        return RectangulationSet::build(config, {Rectangulation{config, {}}});
    }
    Rectangulation scratch{config, std::vector<Segment>(n)};
    std::vector<Rectangulation> out;
    oracle_walk(scratch, 1, out);
    return RectangulationSet::build(config, std::move(out));
}

std::vector<int> removed_subperm(const std::vector<int>& perm, int q) {
    std::vector<int> sub;
    sub.reserve(perm.size() - 1);
    const int qr = perm[q - 1];
    for (int i = 1; i <= static_cast<int>(perm.size()); ++i) {
        if (i == q) continue;
        const int y = perm[i - 1];
        sub.push_back(y < qr ? y : y - 1);
    }
    return sub;
}

long long RcMemo::rc_of(const std::vector<int>& perm, const EnumerateOptions& opts) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(perm);
        if (it != cache_.end()) return it->second;
    }
    PointConfig cfg{perm};
    EnumerateOptions serial = opts;
    serial.workers = 1;  // callers parallelize across configs
    const long long rc = enumerate_backtracking(cfg, serial).rc();
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(perm, rc);
    return rc;
}

namespace {

std::string perm_to_string(const std::vector<int>& perm) {
    std::string s;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(perm[i]);
    }
    return s;
}

}  // namespace

bool RcMemo::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error&) {
        return false;
    }
    if (!j.is_object()) return false;
    std::lock_guard<std::mutex> lock(mu_);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<int> perm;
        std::size_t pos = 0;
        const std::string& key = it.key();
        while (pos < key.size()) {
            std::size_t next = key.find(' ', pos);
            if (next == std::string::npos) next = key.size();
            perm.push_back(std::stoi(key.substr(pos, next - pos)));
            pos = next + 1;
        }
        cache_[perm] = it.value().get<long long>();
    }
    return true;
}

bool RcMemo::save_file(const std::string& path) const {
    nlohmann::json j = nlohmann::json::object();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [perm, rc] : cache_) j[perm_to_string(perm)] = rc;
    }
    std::ofstream out(path);
    if (!out) return false;
    out << j.dump(1) << "\n";
    return out.good();
}

std::size_t RcMemo::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

InsertionGeneration generate_by_insertion(const PointConfig& config, RcMemo* memo,
                                          const EnumerateOptions& opts) {
    const int n = config.n();
    InsertionGeneration gen;
    if (n == 0) {
        gen.set = RectangulationSet::build(config, {Rectangulation{config, {}}});
        gen.productions.resize(1);
        return gen;
    }
    std::vector<Rectangulation> produced;
    std::vector<Production> paths;
    for (int q = 1; q <= n; ++q) {
        const std::vector<int> sub = removed_subperm(config.perm, q);
        RectangulationSet sub_set = enumerate_backtracking(PointConfig{sub}, opts);
        if (memo) memo->rc_of(sub, opts);  // warm the cache for later reuse
        for (std::size_t m = 0; m < sub_set.members.size(); ++m) {
            for (Orientation o : {Orientation::H, Orientation::V}) {
                Rectangulation g =
                    insert_point(sub_set.members[m], q, config.perm[q - 1], o);
                produced.push_back(std::move(g));
                paths.push_back(Production{q, o, sub_set.keys[m]});
            }
        }
    }
    gen.total_productions = static_cast<long long>(produced.size());

    // dedup by canonical key, keeping every production path
    std::map<std::string, std::vector<Production>> by_key;
    std::map<std::string, Rectangulation> rep;
    for (std::size_t i = 0; i < produced.size(); ++i) {
        const std::string key = canonical_key(produced[i]);
        by_key[key].push_back(paths[i]);
        rep.emplace(key, produced[i]);
    }
    std::vector<Rectangulation> members;
    members.reserve(rep.size());
    for (auto& [key, r] : rep) members.push_back(std::move(r));
    gen.set = RectangulationSet::build(config, std::move(members));
    gen.productions.resize(gen.set.members.size());
    for (std::size_t i = 0; i < gen.set.keys.size(); ++i) {
        gen.productions[i] = std::move(by_key[gen.set.keys[i]]);
    }
    return gen;
}

namespace {

std::vector<int> transformed_perm(const std::vector<int>& perm, bool transpose, bool flip_x,
                                  bool flip_y) {
    const int n = static_cast<int>(perm.size());
    std::vector<std::pair<int, int>> pts;
    pts.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int x = i, y = perm[i - 1];
        if (transpose) std::swap(x, y);
        if (flip_x) x = n + 1 - x;
        if (flip_y) y = n + 1 - y;
        pts.emplace_back(x, y);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = pts[i].second;
    return out;
}

}  // namespace

std::vector<std::vector<int>> symmetry_orbit(const std::vector<int>& perm) {
    std::vector<std::vector<int>> orbit;
    for (int mask = 0; mask < 8; ++mask) {
        orbit.push_back(transformed_perm(perm, mask & 1, mask & 2, mask & 4));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<int> orbit_representative(const std::vector<int>& perm) {
    return symmetry_orbit(perm).front();
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<PermCount> count_all_perms(int n, bool symmetry_reduction,
                                       const EnumerateOptions& opts) {
    if (n > opts.max_n) {
        throw CeilingExceeded("count: n=" + std::to_string(n) + " exceeds ceiling " +
                              std::to_string(opts.max_n));
    }
    std::vector<std::vector<int>> perms = all_perms(n);
    std::vector<std::vector<std::vector<int>>> orbits(perms.size());
    if (symmetry_reduction) {
        std::vector<std::vector<int>> kept;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            auto orbit = symmetry_orbit(perms[i]);
            if (orbit.front() == perms[i]) {
                orbits[kept.size()] = std::move(orbit);
                kept.push_back(perms[i]);
            }
        }
        perms = std::move(kept);
        orbits.resize(perms.size());
    }

    std::vector<PermCount> out(perms.size());
    const int workers = effective_workers(opts.workers);
    (void)workers;
    EnumerateOptions inner = opts;
    inner.workers = 1;  // the sweep itself is the parallel loop
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
#endif
    for (std::size_t i = 0; i < perms.size(); ++i) {
        RectangulationSet set = enumerate_backtracking(PointConfig{perms[i]}, inner);
        PermCount pc;
        pc.perm = perms[i];
        pc.rc = set.rc();
        pc.max_degree = 0;
        pc.d2_min = set.members.empty() ? 0 : n + 2;
        for (const Rectangulation& r : set.members) {
            int d2 = 0;
            for (int a = 1; a <= n; ++a) {
                const int d = degree(r, a);
                pc.max_degree = std::max(pc.max_degree, d);
                if (d == 2) ++d2;
            }
            pc.d2_min = std::min(pc.d2_min, d2);
        }
        if (symmetry_reduction) pc.orbit = orbits[i];
        out[i] = std::move(pc);
    }
    return out;
}

}  // namespace rect
