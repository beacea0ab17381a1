// Compares the OpenMP line-scan kernels against the serial reference on
// small and mid-size geometries.

#include <chrono>
#include <cstdio>
#include <functional>

#include "tmodq/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tmodq;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

void bench_space(const char* label, int p, int e, int r, int reps) {
    auto space = std::make_shared<ProjSpace>(FiniteField(p, e), r);
    Arc arc = e % 2 == 0 ? hermitian_arc(space)
                         : quadric_arc(standard_quadric(space, r % 2 ? QuadricKind::Elliptic
                                                                     : QuadricKind::Parabolic),
                                       1);
    printf("%s: %ld points, %ld lines, arc size %ld\n", label, space->num_points(),
           space->num_lines(), arc.cardinality());

    volatile long sink = 0;
    double s1 = time_best_of(reps, [&] { sink = sink + classify_mod_serial(arc).t; });
    double p1 = time_best_of(reps, [&] { sink = sink + classify_mod(arc).t; });
    printf("  classify_mod   serial %.6fs  parallel %.6fs  speedup %.2fx\n", s1, p1, s1 / p1);

    double s2 = time_best_of(reps, [&] { sink = sink + spectrum_serial(arc).hyperplanes.size(); });
    double p2 = time_best_of(reps, [&] { sink = sink + spectrum(arc).hyperplanes.size(); });
    printf("  spectrum       serial %.6fs  parallel %.6fs  speedup %.2fx\n", s2, p2, s2 / p2);
}

}  // namespace

int main() {
#ifdef _OPENMP
    printf("OpenMP, %d threads\n", omp_get_max_threads());
#else
    printf("built without OpenMP; parallel kernels run serial code paths\n");
#endif
    bench_space("PG(3,5)", 5, 1, 3, 20);
    bench_space("PG(3,7)", 7, 1, 3, 10);
    bench_space("PG(3,9)", 3, 2, 3, 5);
    bench_space("PG(4,5)", 5, 1, 4, 3);
    return 0;
}
