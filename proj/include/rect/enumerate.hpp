#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rect/model.hpp"

namespace rect {

struct CeilingExceeded : std::runtime_error {
    explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

// R(P), keyed and ordered by canonical key.
struct RectangulationSet {
    PointConfig config;
    std::vector<Rectangulation> members;  // sorted by canonical key
    std::vector<std::string> keys;        // parallel to members
    std::unordered_map<std::string, int> index;

    long long rc() const { return static_cast<long long>(members.size()); }
    int find(const std::string& key) const {
        auto it = index.find(key);
        return it == index.end() ? -1 : it->second;
    }

    static RectangulationSet build(const PointConfig& config,
                                   std::vector<Rectangulation> members);
};

struct EnumerateOptions {
    int max_n = 10;   // resource guard
    int workers = 1;  // 0 = all hardware threads
};

struct OracleOptions {
    int max_n = 4;
};

// Complete enumeration by pruned backtracking over per-point orientation +
// stopper assignments, decided in x-rank order. Partial assignments are
// abandoned as soon as a violation among decided segments is certain; no
// valid assignment is ever pruned. Top-level branches run in parallel;
// output is identical for any worker count.
RectangulationSet enumerate_backtracking(const PointConfig& config,
                                         const EnumerateOptions& opts = {});

// Independent reference: walks the full orientation x stopper assignment
// space with no pruning and accepts through the full validator. Shares
// nothing with the backtracking search except the validator itself.
RectangulationSet enumerate_oracle(const PointConfig& config,
                                   const OracleOptions& opts = {});

// rank-normalized permutation of P minus its q-th point (1-based)
std::vector<int> removed_subperm(const std::vector<int>& perm, int q);

// Thread-safe memo of rc by normalized permutation, with optional file
// persistence (one JSON object, perm string -> rc).
class RcMemo {
public:
    long long rc_of(const std::vector<int>& perm, const EnumerateOptions& opts = {});
    bool load_file(const std::string& path);
    bool save_file(const std::string& path) const;
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<std::vector<int>, long long> cache_;
};

struct Production {
    int q = 0;  // inserted point (index in the full config)
    Orientation orientation = Orientation::H;
    std::string sub_key;  // canonical key of the source sub-rectangulation
};

// Result of the insertion generation: a (generally partial) subset of R(P)
// together with the pre-dedup production paths of each produced member.
struct InsertionGeneration {
    RectangulationSet set;
    std::vector<std::vector<Production>> productions;  // parallel to set.members
    long long total_productions = 0;                   // = 2 * sum_q rc(P minus q)
};

// Generates rectangulations by inserting each point q, with both
// orientations, into every member of the complete R(P minus q). Misses
// exactly the members with d2 = 0; every produced member carries d2(G)
// distinct production paths.
InsertionGeneration generate_by_insertion(const PointConfig& config, RcMemo* memo = nullptr,
                                          const EnumerateOptions& opts = {});

// The eight images of the permutation under the rectangle symmetries
// (transpose and axis flips), deduplicated and sorted.
std::vector<std::vector<int>> symmetry_orbit(const std::vector<int>& perm);
std::vector<int> orbit_representative(const std::vector<int>& perm);

struct PermCount {
    std::vector<int> perm;
    long long rc = 0;
    int max_degree = 0;  // over all members and segments
    int d2_min = 0;      // minimum d2(G) over members
    std::vector<std::vector<int>> orbit;  // nonempty only under symmetry reduction
};

// rc and degree statistics for every permutation of size n, in
// lexicographic order; with symmetry_reduction only the lexicographically
// least member of each orbit is enumerated. Parallel over permutations,
// deterministic output order.
std::vector<PermCount> count_all_perms(int n, bool symmetry_reduction,
                                       const EnumerateOptions& opts = {});

std::vector<std::vector<int>> all_perms(int n);

}  // namespace rect
