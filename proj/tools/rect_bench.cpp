// Benchmark of the enumeration kernels: the pruned backtracking search at
// one and several workers against the unpruned brute-force oracle. Both
// sides are checked to agree where the oracle is feasible.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include "rect/enumerate.hpp"

using namespace rect;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::vector<int> diagonal(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    return perm;
}

}  // namespace

int main() {
    std::printf("%-28s %10s %12s\n", "kernel", "rc", "time [ms]");

    for (int n = 3; n <= 4; ++n) {
        PointConfig cfg{diagonal(n)};
        RectangulationSet fast, slow;
        const double t_fast =
            time_ms([&] { fast = enumerate_backtracking(cfg); });
        const double t_slow = time_ms([&] { slow = enumerate_oracle(cfg); });
        std::printf("backtracking diag n=%-8d %10lld %12.2f\n", n, fast.rc(), t_fast);
        std::printf("oracle       diag n=%-8d %10lld %12.2f\n", n, slow.rc(), t_slow);
        if (fast.keys != slow.keys) {
            std::printf("MISMATCH between backtracking and oracle at n=%d\n", n);
            return 1;
        }
    }

    for (int n = 6; n <= 8; ++n) {
        PointConfig cfg{diagonal(n)};
        EnumerateOptions serial;
        serial.workers = 1;
        EnumerateOptions parallel;
        parallel.workers = 0;  // all cores
        RectangulationSet s1, sk;
        const double t1 = time_ms([&] { s1 = enumerate_backtracking(cfg, serial); });
        const double tk = time_ms([&] { sk = enumerate_backtracking(cfg, parallel); });
        std::printf("serial 1w    diag n=%-8d %10lld %12.2f\n", n, s1.rc(), t1);
        std::printf("parallel     diag n=%-8d %10lld %12.2f  (speedup %.2fx)\n", n, sk.rc(),
                    tk, tk > 0 ? t1 / tk : 0.0);
        if (s1.keys != sk.keys) {
            std::printf("MISMATCH between worker counts at n=%d\n", n);
            return 1;
        }
    }

    PointConfig sweep_cfg{diagonal(5)};
    EnumerateOptions serial;
    serial.workers = 1;
    EnumerateOptions parallel;
    parallel.workers = 0;
    const double sweep1 = time_ms([&] { count_all_perms(5, false, serial); });
    const double sweepk = time_ms([&] { count_all_perms(5, false, parallel); });
    std::printf("sweep 1w     all perms n=5 %22.2f\n", sweep1);
    std::printf("sweep        all perms n=5 %22.2f  (speedup %.2fx)\n", sweepk,
                sweepk > 0 ? sweep1 / sweepk : 0.0);
    return 0;
}
