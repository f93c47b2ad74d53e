#pragma once

#include <cstdint>
#include <variant>

#include "sie/exec.hpp"
#include "sie/urns.hpp"

namespace sie {

/// Draw n times from one urn; success when every ball is red.
struct SingleUrnAllRed {
    long draws;
    Rational red;
    Rational black;
};

/// Run n steps drawing once from each urn; success when every step yields at
/// least one black ball.
struct MultiUrnBlackEachStep {
    long steps;
    UrnSpec urns;
};

/// Sample max(S)+1 i.i.d. uniforms; success when u_i < u_{i+1} for all i in S.
struct AscentEvent {
    FiniteIndexSet set;
};

using Experiment = std::variant<SingleUrnAllRed, MultiUrnBlackEachStep, AscentEvent>;

/// Exact probability of the experiment's success event (closed form).
Rational exact_probability(const Experiment& e);

struct SimulationReport {
    long trials = 0;
    long successes = 0;
    double estimate = 0.0;
    Rational exact;
    double z_score = 0.0;
    std::uint64_t seed = 0;
    int workers = 1;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// Runs the seeded generative process and compares the empirical frequency
/// against the exact closed form. Trials are split into `workers` chunks,
/// each with an independent stream derived from (seed, chunk index), and the
/// report is the deterministic merge: identical (experiment, trials, seed,
/// workers) always yields an identical report, whether the chunks run
/// serially or on OpenMP threads.
SimulationReport simulate(const Experiment& e, long trials, std::uint64_t seed, int workers = 1,
                          Exec exec = Exec::Auto);

namespace reference {
/// Serial execution of the same chunked computation; equals simulate().
SimulationReport simulate(const Experiment& e, long trials, std::uint64_t seed, int workers = 1);
}  // namespace reference

}  // namespace sie
