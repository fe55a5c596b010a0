// Compares the serial reference and the OpenMP kernel for polar-extreme
// enumeration on cyclic cones of growing size.

#include <chrono>
#include <cstdio>
#include <random>

#include "tropcone/polar.hpp"

#ifdef TROPCONE_HAVE_OPENMP
#include <omp.h>
#endif

using namespace tropcone;

namespace {

Cone cyclic_cone(int n, int p) {
    std::vector<Point> gens;
    for (int t = 1; t <= p; ++t) {
        std::vector<Rat> coords;
        for (int i = 0; i < n; ++i) coords.emplace_back(t * i);
        gens.push_back(Point::finite(std::move(coords)));
    }
    return Cone(std::move(gens));
}

double time_enumeration(const Cone& c, bool parallel, std::size_t* count) {
    PolarOptions opts;
    opts.candidate_cap = 100'000'000;
    opts.parallel = parallel;
    auto start = std::chrono::steady_clock::now();
    std::size_t total = 0;
    for (int j = 0; j < c.dim(); ++j) {
        auto ext = parallel ? enumerate_polar_extremes(c, j, opts)
                            : enumerate_polar_extremes_serial(c, j, opts);
        total += ext.size();
    }
    *count = total;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main() {
#ifdef TROPCONE_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path falls back to serial\n");
#endif
    std::printf("%6s %4s %12s %12s %10s %8s\n", "n", "p", "serial[s]", "parallel[s]",
                "speedup", "extremes");
    for (auto [n, p] : {std::pair{4, 6}, {4, 8}, {5, 6}, {5, 7}, {6, 5}}) {
        Cone c = cyclic_cone(n, p);
        std::size_t cs = 0, cp = 0;
        double ts = time_enumeration(c, false, &cs);
        double tp = time_enumeration(c, true, &cp);
        if (cs != cp) {
            std::printf("MISMATCH at n=%d p=%d (serial %zu vs parallel %zu)\n", n, p,
                        cs, cp);
            return 1;
        }
        std::printf("%6d %4d %12.4f %12.4f %9.2fx %8zu\n", n, p, ts, tp, ts / tp, cs);
    }
    return 0;
}
