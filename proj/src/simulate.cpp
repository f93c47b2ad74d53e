#include "sie/simulate.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace sie {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, int worker) {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(worker + 1)));
}

// 53 uniform bits; the same bits drive both the exact-rational Bernoulli
// comparison and the double-valued uniforms.
std::uint64_t draw53(std::mt19937_64& rng) { return rng() >> 11; }

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(draw53(rng)) * 0x1.0p-53;
}

// True with probability p: compares the 53-bit uniform u/2^53 < p exactly.
bool bernoulli(std::mt19937_64& rng, const Rational& p) {
    const std::uint64_t u = draw53(rng);
    return Integer(u) * p.denominator() < p.numerator() << 53;
}

bool run_single_urn(std::mt19937_64& rng, const SingleUrnAllRed& e) {
    long reds = 0;
    for (long i = 0; i < e.draws; ++i) {
        const Rational p_red = (e.red + Rational(reds)) / (e.red + e.black + Rational(i));
        if (!bernoulli(rng, p_red)) return false;  // a black ball ends the all-red event
        ++reds;
    }
    return true;
}

bool run_multi_urn(std::mt19937_64& rng, const MultiUrnBlackEachStep& e,
                   std::vector<long>& reds_scratch) {
    const std::size_t m = e.urns.size();
    reds_scratch.assign(m, 0);
    bool ok = true;
    for (long step = 0; step < e.steps && ok; ++step) {
        bool any_black = false;
        for (std::size_t u = 0; u < m; ++u) {
            const Urn& urn = e.urns.urns[u];
            const Rational p_red =
                (urn.red + Rational(reds_scratch[u])) / (urn.red + urn.black + Rational(step));
            if (bernoulli(rng, p_red))
                ++reds_scratch[u];
            else
                any_black = true;
        }
        ok = any_black;
    }
    return ok;
}

bool run_ascent(std::mt19937_64& rng, const AscentEvent& e, std::vector<double>& u_scratch) {
    const std::size_t count = static_cast<std::size_t>(e.set.max()) + 1;
    u_scratch.resize(count);
    for (double& u : u_scratch) u = uniform01(rng);
    for (long i : e.set.members) {
        // ties count as failure
        if (!(u_scratch[static_cast<std::size_t>(i) - 1] < u_scratch[static_cast<std::size_t>(i)]))
            return false;
    }
    return true;
}

long run_chunk(const Experiment& e, long trials, std::uint64_t chunk_seed) {
    std::mt19937_64 rng(chunk_seed);
    std::vector<long> reds_scratch;
    std::vector<double> u_scratch;
    long successes = 0;
    for (long t = 0; t < trials; ++t) {
        const bool hit = std::visit(
            [&](const auto& exp) -> bool {
                using T = std::decay_t<decltype(exp)>;
                if constexpr (std::is_same_v<T, SingleUrnAllRed>)
                    return run_single_urn(rng, exp);
                else if constexpr (std::is_same_v<T, MultiUrnBlackEachStep>)
                    return run_multi_urn(rng, exp, reds_scratch);
                else
                    return run_ascent(rng, exp, u_scratch);
            },
            e);
        if (hit) ++successes;
    }
    return successes;
}

void validate(const Experiment& e, long trials, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    std::visit(
        [](const auto& exp) {
            using T = std::decay_t<decltype(exp)>;
            if constexpr (std::is_same_v<T, SingleUrnAllRed>) {
                if (exp.draws < 0) throw std::invalid_argument("draws must be nonnegative");
                if (!exp.red.is_positive() || !exp.black.is_positive())
                    throw std::domain_error("invalid urn parameters");
            } else if constexpr (std::is_same_v<T, MultiUrnBlackEachStep>) {
                if (exp.steps < 0) throw std::invalid_argument("steps must be nonnegative");
                exp.urns.validate();
            } else {
                if (exp.set.empty())
                    throw std::invalid_argument("ascent simulation needs a nonempty set");
            }
        },
        e);
}

SimulationReport merge(const Experiment& e, long trials, std::uint64_t seed, int workers,
                       long successes) {
    SimulationReport report;
    report.trials = trials;
    report.successes = successes;
    report.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    report.exact = exact_probability(e);
    report.seed = seed;
    report.workers = workers;
    const double p = report.exact.to_double();
    if (p > 0.0 && p < 1.0)
        report.z_score =
            (report.estimate - p) * std::sqrt(static_cast<double>(trials) / (p * (1.0 - p)));
    else
        report.z_score = report.estimate == p ? 0.0 : std::numeric_limits<double>::infinity();
    return report;
}

SimulationReport simulate_impl(const Experiment& e, long trials, std::uint64_t seed, int workers,
                               bool parallel) {
    validate(e, trials, workers);
    const long base = trials / workers;
    const long rem = trials % workers;
    std::vector<long> successes(static_cast<std::size_t>(workers), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int w = 0; w < workers; ++w) {
        const long chunk = base + (w < rem ? 1 : 0);
        successes[static_cast<std::size_t>(w)] = run_chunk(e, chunk, stream_seed(seed, w));
    }
    (void)parallel;
    long total = 0;
    for (long s : successes) total += s;
    return merge(e, trials, seed, workers, total);
}

}  // namespace

Rational exact_probability(const Experiment& e) {
    return std::visit(
        [](const auto& exp) -> Rational {
            using T = std::decay_t<decltype(exp)>;
            if constexpr (std::is_same_v<T, SingleUrnAllRed>)
                return urn_abar(exp.draws, exp.red, exp.black);
            else if constexpr (std::is_same_v<T, MultiUrnBlackEachStep>)
                return multi_urn_bbar(exp.steps, exp.urns);
            else
                return ascent_prob(exp.set);
        },
        e);
}

SimulationReport simulate(const Experiment& e, long trials, std::uint64_t seed, int workers,
                          Exec exec) {
#ifdef _OPENMP
    const bool parallel = exec == Exec::Parallel || (exec == Exec::Auto && workers > 1);
#else
    if (exec == Exec::Parallel) throw std::runtime_error("built without OpenMP");
    const bool parallel = false;
#endif
    return simulate_impl(e, trials, seed, workers, parallel);
}

namespace reference {

SimulationReport simulate(const Experiment& e, long trials, std::uint64_t seed, int workers) {
    return simulate_impl(e, trials, seed, workers, false);
}

}  // namespace reference

}  // namespace sie
