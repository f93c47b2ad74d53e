// Compares the serial and OpenMP paths of the parallel kernels: the subset
// transforms over 2^w tables and the sharded Monte Carlo simulator. Results
// must match exactly; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sie/simulate.hpp"
#include "sie/subset.hpp"

using namespace sie;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SubsetFunction random_table(std::mt19937_64& rng, int w) {
    std::uniform_int_distribution<long> num(-999, 999), den(1, 16);
    std::vector<Rational> vals(std::size_t{1} << w);
    for (Rational& r : vals) r = Rational(num(rng), den(rng));
    return SubsetFunction(w, std::move(vals));
}

void bench_subset(int w) {
    std::mt19937_64 rng(12345);
    const SubsetFunction f = random_table(rng, w);

    auto t0 = std::chrono::steady_clock::now();
    const SubsetFunction serial = subset_sie_transform(f, Exec::Serial);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const SubsetFunction parallel = subset_sie_transform(f, Exec::Parallel);
    const double t_parallel = seconds_since(t0);

    std::printf("subset sie transform  w=%2d  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx  %s\n",
                w, t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                serial == parallel ? "exact match" : "MISMATCH");
}

void bench_simulate(long trials, int workers) {
    const UrnSpec two{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
    const Experiment e = MultiUrnBlackEachStep{2, two};

    auto t0 = std::chrono::steady_clock::now();
    const SimulationReport serial = reference::simulate(e, trials, 42, workers);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const SimulationReport parallel = simulate(e, trials, 42, workers, Exec::Parallel);
    const double t_parallel = seconds_since(t0);

    std::printf("simulate %ld trials    workers=%d  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx  %s\n",
                trials, workers, t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                serial == parallel ? "exact match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int max_w = 18;
    if (argc > 1) max_w = std::atoi(argv[1]);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    const int workers = omp_get_max_threads();
#else
    std::printf("built without OpenMP; parallel path unavailable\n");
    return 0;
#endif
    for (int w = 12; w <= max_w; w += 2) bench_subset(w);
    bench_simulate(200000, workers);
    bench_simulate(200000, 4 * workers);
    return 0;
}
