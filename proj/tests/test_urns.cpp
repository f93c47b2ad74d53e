#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "sie/combinatorics.hpp"
#include "sie/subset.hpp"
#include "sie/urns.hpp"

using namespace sie;

namespace {

Rational random_positive_rational(std::mt19937_64& rng, long max_num = 12, long max_den = 8) {
    std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
    return Rational(num(rng), den(rng));
}

UrnSpec random_spec(std::mt19937_64& rng, std::size_t m) {
    UrnSpec spec;
    for (std::size_t i = 0; i < m; ++i)
        spec.urns.push_back({random_positive_rational(rng), random_positive_rational(rng)});
    return spec;
}

}  // namespace

TEST_SUITE("urns") {

TEST_CASE("polya_sequence_prob examples") {
    CHECK(polya_sequence_prob(Rational(1), Rational(1), 2, 0) == Rational(1, 3));
    CHECK(polya_sequence_prob(Rational(3, 2), Rational(7), 0, 0) == Rational(1));
    CHECK(polya_sequence_prob(Rational(1), Rational(1), 1, 1) == Rational(1, 6));
}

TEST_CASE("urn parameter validation") {
    CHECK_THROWS_WITH_AS(polya_sequence_prob(Rational(0), Rational(1), 1, 1),
                         "invalid urn parameters", std::domain_error);
    CHECK_THROWS_WITH_AS(urn_abar(1, Rational(1), Rational(-2)), "invalid urn parameters",
                         std::domain_error);
    CHECK_THROWS_AS(multi_urn_bbar(1, UrnSpec{}), std::domain_error);
}

TEST_CASE("urn_abar examples") {
    CHECK(urn_abar(2, Rational(1), Rational(1)) == Rational(1, 3));
    CHECK(urn_abar(0, Rational(5, 3), Rational(2)) == Rational(1));
    CHECK(urn_abar(1, Rational(3), Rational(2)) == Rational(3, 5));
}

TEST_CASE("urn_bbar examples") {
    CHECK(urn_bbar(2, Rational(1), Rational(1)) == Rational(1, 3));
    CHECK(urn_bbar(2, Rational(1), Rational(1)) ==
          Rational(1) - Rational(2) * Rational(1, 2) + Rational(1, 3));
    CHECK(urn_bbar(0, Rational(4), Rational(9, 7)) == Rational(1));
    CHECK(urn_bbar(3, Rational(2), Rational(5)) == Rational(5, 12));
}

TEST_CASE("Chu-Vandermonde: closed form equals the alternating sum") {
    std::mt19937_64 rng(401);
    for (int i = 0; i < 100; ++i) {
        const Rational r = random_positive_rational(rng, 30, 10);
        const Rational b = random_positive_rational(rng, 30, 10);
        for (long n = 0; n <= 20; ++n)
            CHECK(rising_factorial(b, n) / rising_factorial(r + b, n) ==
                  chu_vandermonde_sum(n, r, b));
    }
}

TEST_CASE("single-urn abar and bbar sequences form a symmetric pair") {
    std::mt19937_64 rng(409);
    for (int i = 0; i < 20; ++i) {
        const Rational r = random_positive_rational(rng);
        const Rational b = random_positive_rational(rng);
        Sequence abar, bbar;
        for (long n = 0; n <= 20; ++n) {
            abar.push_back(urn_abar(n, r, b));
            bbar.push_back(urn_bbar(n, r, b));
        }
        CHECK(is_sie_pair(abar, bbar));
    }
}

TEST_CASE("multi_urn_abar examples") {
    const UrnSpec two{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
    CHECK(multi_urn_abar(1, two) == Rational(1, 4));
    CHECK(multi_urn_abar(0, two) == Rational(1));
    CHECK(multi_urn_abar(2, UrnSpec{{{Rational(1), Rational(1)}}}) ==
          urn_abar(2, Rational(1), Rational(1)));
}

TEST_CASE("multi_urn_bbar examples") {
    const UrnSpec two{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
    CHECK(multi_urn_bbar(1, two) == Rational(3, 4));
    CHECK(multi_urn_bbar(2, two) == Rational(11, 18));
    std::mt19937_64 rng(419);
    for (int i = 0; i < 20; ++i) {
        const Rational r = random_positive_rational(rng);
        const Rational b = random_positive_rational(rng);
        for (long n = 0; n <= 8; ++n)
            CHECK(multi_urn_bbar(n, UrnSpec{{{r, b}}}) == urn_bbar(n, r, b));
    }
}

TEST_CASE("ascent_prob examples") {
    CHECK(ascent_prob(FiniteIndexSet({1, 2})) == Rational(1, 6));
    CHECK(ascent_prob(FiniteIndexSet({1, 3})) == Rational(1, 4));
    CHECK(ascent_prob(FiniteIndexSet{}) == Rational(1));
    // {1,2,3,7,8} -> run lengths 3 and 2 -> 1/(4! 3!)
    CHECK(ascent_prob(FiniteIndexSet({1, 2, 3, 7, 8})) == Rational(1, 144));
}

TEST_CASE("index sets must be strictly increasing positive integers") {
    CHECK_THROWS_AS(FiniteIndexSet({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteIndexSet({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteIndexSet({3, 1}), std::invalid_argument);
}

TEST_CASE("ascent function is its own sie transform") {
    // b(S) = a(S): sum over subsets T of S of (-1)^|T| a(T) equals a(S).
    std::mt19937_64 rng(421);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> members;
        for (long i = 1; i <= 12; ++i)
            if (coin(rng)) members.push_back(i);
        const FiniteIndexSet s(members);
        Rational alt(0);
        const std::size_t k = members.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<long> sub;
            for (std::size_t j = 0; j < k; ++j)
                if (mask & (1u << j)) sub.push_back(members[j]);
            const Rational term = ascent_prob(FiniteIndexSet(sub));
            alt += (std::popcount(mask) & 1) ? -term : term;
        }
        CHECK(alt == ascent_prob(s));
    }
}

TEST_CASE("the ascent function on subsets is fixed by the subset sie transform") {
    const int w = 8;  // mask bit i stands for the integer i+1
    std::vector<Rational> vals(std::size_t{1} << w);
    for (std::uint32_t mask = 0; mask < vals.size(); ++mask) {
        std::vector<long> members;
        for (int i = 0; i < w; ++i)
            if (mask & (1u << i)) members.push_back(i + 1);
        vals[mask] = ascent_prob(FiniteIndexSet(members));
    }
    const SubsetFunction f(w, std::move(vals));
    CHECK(subset_sie_transform(f) == f);
}

TEST_CASE("coin_pair") {
    const auto [abar, bbar] = coin_pair(2, Rational(1, 3));
    CHECK(abar == Sequence{Rational(1), Rational(1, 3), Rational(1, 9)});
    CHECK(bbar == Sequence{Rational(1), Rational(2, 3), Rational(4, 9)});
    CHECK(is_sie_pair(abar, bbar));

    const auto [a0, b0] = coin_pair(3, Rational(0));
    CHECK(a0 == Sequence{Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(b0 == Sequence{Rational(1), Rational(1), Rational(1), Rational(1)});

    const auto [ah, bh] = coin_pair(3, Rational(1, 2));
    CHECK(ah == bh);
    CHECK(is_sie_pair(ah, bh));
}

TEST_CASE("coin_pair is symmetric for any rational p") {
    std::mt19937_64 rng(431);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    for (int i = 0; i < 50; ++i) {
        const auto [abar, bbar] = coin_pair(10, Rational(num(rng), den(rng)));
        CHECK(is_sie_pair(abar, bbar));
    }
}

TEST_CASE("lattice_path_prob examples") {
    CHECK(lattice_path_prob({Step::Right, Step::Up}, Rational(1), Rational(1)) == Rational(1, 6));
    CHECK(lattice_path_prob({Step::Up, Step::Right}, Rational(1), Rational(1)) == Rational(1, 6));
    CHECK(lattice_path_prob({}, Rational(2), Rational(3)) == Rational(1));
    CHECK(lattice_path_prob({Step::Right, Step::Right}, Rational(1), Rational(1)) ==
          polya_sequence_prob(Rational(1), Rational(1), 2, 0));
}

TEST_CASE("exchangeability: every ordering of a color multiset has the same probability") {
    std::mt19937_64 rng(433);
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n + m <= 8; ++n) {
            const Rational r = random_positive_rational(rng);
            const Rational b = random_positive_rational(rng);
            const Rational expected = polya_sequence_prob(r, b, m, n);
            std::vector<Step> path(static_cast<std::size_t>(m), Step::Right);
            path.insert(path.end(), static_cast<std::size_t>(n), Step::Up);
            std::sort(path.begin(), path.end());
            do {
                CHECK(lattice_path_prob(path, r, b) == expected);
            } while (std::next_permutation(path.begin(), path.end()));
        }
}

TEST_CASE("enumerate_outcomes_bbar examples") {
    const UrnSpec two{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
    CHECK(enumerate_outcomes_bbar(1, two) == Rational(3, 4));
    CHECK(enumerate_outcomes_bbar(2, two) == Rational(11, 18));
    CHECK(enumerate_outcomes_bbar(0, two) == Rational(1));
}

TEST_CASE("enumeration agrees with the alternating sum") {
    std::mt19937_64 rng(439);
    for (std::size_t m = 1; m <= 3; ++m) {
        const UrnSpec spec = random_spec(rng, m);
        for (long n = 0; n <= 5; ++n)
            CHECK(enumerate_outcomes_bbar(n, spec) == multi_urn_bbar(n, spec));
    }
}

TEST_CASE("enumeration size bound") {
    std::mt19937_64 rng(443);
    const UrnSpec spec = random_spec(rng, 5);
    CHECK_THROWS_WITH_AS(enumerate_outcomes_bbar(15, spec), "enumeration too large",
                         std::length_error);
}

TEST_CASE("total probability over all outcome sequences is 1") {
    std::mt19937_64 rng(449);
    for (std::size_t m = 1; m <= 2; ++m) {
        const UrnSpec spec = random_spec(rng, m);
        for (long n = 0; n <= 5; ++n) {
            // enumerate all (2^m)^n color sequences, including all-red steps
            std::vector<long> blacks(m, 0);
            Rational total(0);
            auto walk = [&](auto&& self, long step) -> void {
                if (step == n) {
                    Rational p(1);
                    for (std::size_t u = 0; u < m; ++u)
                        p *= polya_sequence_prob(spec.urns[u].red, spec.urns[u].black,
                                                 n - blacks[u], blacks[u]);
                    total += p;
                    return;
                }
                for (unsigned long vec = 0; vec < (1ul << m); ++vec) {
                    for (std::size_t u = 0; u < m; ++u)
                        if (vec & (1ul << u)) ++blacks[u];
                    self(self, step + 1);
                    for (std::size_t u = 0; u < m; ++u)
                        if (vec & (1ul << u)) --blacks[u];
                }
            };
            walk(walk, 0);
            CHECK(total == Rational(1));
        }
    }
}

}  // TEST_SUITE
