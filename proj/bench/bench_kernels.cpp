// Benchmarks the OpenMP kernels against their serial reference
// implementations: polytope vertex enumeration, lattice-point counting and
// Gelfand-Tsetlin pattern counting.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "flagpoly/polytope.hpp"

using namespace flagpoly;

namespace {

double time_of(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-38s serial %8.3fs   omp %8.3fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        std::vector<DominantWeight> lams;
        for (int a = 1; a <= 5; ++a)
            for (int b = 0; b < a; ++b) lams.push_back(DominantWeight({a + 2, a, b, 0}));
        std::vector<std::vector<Rational>> xs, xp;
        double ts = time_of([&] {
            for (auto& lam : lams)
                for (auto c : {PolytopeChart::StringZ, PolytopeChart::IdealM})
                    xs = polytope_vertices_serial(polytope_hrep(c, lam));
        });
        double tp = time_of([&] {
            for (auto& lam : lams)
                for (auto c : {PolytopeChart::StringZ, PolytopeChart::IdealM})
                    xp = polytope_vertices(polytope_hrep(c, lam));
        });
        if (xs != xp) {
            std::printf("vertex kernels disagree\n");
            return 1;
        }
        report("vertex enumeration (30 n=4 polytopes)", ts, tp);
    }

    {
        DominantWeight lam({9, 6, 3, 0});
        TropPolytope p = polytope_hrep(PolytopeChart::IdealM, lam);
        long long a = 0, b = 0;
        double ts = time_of([&] { a = lattice_count_serial(p); });
        double tp = time_of([&] { b = lattice_count(p); });
        if (a != b) {
            std::printf("lattice kernels disagree\n");
            return 1;
        }
        report("lattice count (n=4 ideal, depth 9)", ts, tp);
    }

    {
        DominantWeight lam({20, 15, 10, 5, 0});
        long long a = 0, b = 0;
        double ts = time_of([&] { a = gt_pattern_count_serial(lam); });
        double tp = time_of([&] { b = gt_pattern_count(lam); });
        if (a != b) {
            std::printf("GT kernels disagree\n");
            return 1;
        }
        report("GT pattern count (n=5, depth 20)", ts, tp);
    }
    return 0;
}
