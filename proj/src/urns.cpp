#include "sie/urns.hpp"

#include <algorithm>
#include <stdexcept>

#include "sie/combinatorics.hpp"
#include "sie/hypergeometric.hpp"

namespace sie {

void UrnSpec::validate() const {
    if (urns.empty()) throw std::domain_error("invalid urn parameters");
    for (const Urn& u : urns)
        if (!u.red.is_positive() || !u.black.is_positive())
            throw std::domain_error("invalid urn parameters");
}

namespace {

void require_positive(const Rational& r, const Rational& b) {
    if (!r.is_positive() || !b.is_positive()) throw std::domain_error("invalid urn parameters");
}

}  // namespace

Rational polya_sequence_prob(const Rational& r, const Rational& b, long m, long n) {
    require_positive(r, b);
    return rising_factorial(r, m) * rising_factorial(b, n) / rising_factorial(r + b, m + n);
}

Rational urn_abar(long n, const Rational& r, const Rational& b) {
    require_positive(r, b);
    return rising_factorial(r, n) / rising_factorial(r + b, n);
}

Rational chu_vandermonde_sum(long n, const Rational& r, const Rational& b) {
    require_positive(r, b);
    // term_k = (-1)^k C(n,k) (r)_k/(r+b)_k, updated incrementally.
    Rational sum(0);
    Rational term(1);
    for (long k = 0;; ++k) {
        sum += term;
        if (k == n) break;
        term *= Rational(-(n - k), k + 1) * (r + Rational(k)) / (r + b + Rational(k));
    }
    return sum;
}

Rational urn_bbar(long n, const Rational& r, const Rational& b) {
    Rational closed = rising_factorial(b, n) / rising_factorial(r + b, n);
    if (closed != chu_vandermonde_sum(n, r, b))
        throw std::logic_error("urn_bbar: closed form disagrees with alternating sum");
    return closed;
}

Rational multi_urn_abar(long n, const UrnSpec& spec) {
    spec.validate();
    Rational prod(1);
    for (const Urn& u : spec.urns)
        prod *= rising_factorial(u.red, n) / rising_factorial(u.red + u.black, n);
    return prod;
}

Rational multi_urn_bbar_sum(long n, const UrnSpec& spec) {
    spec.validate();
    Rational sum(0);
    Rational term(1);
    for (long k = 0;; ++k) {
        sum += term;
        if (k == n) break;
        term *= Rational(-(n - k), k + 1);
        for (const Urn& u : spec.urns)
            term *= (u.red + Rational(k)) / (u.red + u.black + Rational(k));
    }
    return sum;
}

Rational multi_urn_bbar(long n, const UrnSpec& spec) {
    Rational sum = multi_urn_bbar_sum(n, spec);
    if (sum != eval_terminating_pFq(multi_urn_hypergeometric_spec(n, spec)))
        throw std::logic_error("multi_urn_bbar: sum disagrees with hypergeometric evaluation");
    return sum;
}

FiniteIndexSet::FiniteIndexSet(std::vector<long> m) : members(std::move(m)) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 1 || (i > 0 && members[i] <= members[i - 1]))
            throw std::invalid_argument("index set must be strictly increasing positive integers");
    }
}

long FiniteIndexSet::max() const {
    if (members.empty()) throw std::invalid_argument("empty index set has no maximum");
    return members.back();
}

Rational ascent_prob(const FiniteIndexSet& s) {
    Rational prod(1);
    std::size_t i = 0;
    while (i < s.members.size()) {
        std::size_t j = i;
        while (j + 1 < s.members.size() && s.members[j + 1] == s.members[j] + 1) ++j;
        const long run = static_cast<long>(j - i + 1);
        prod /= Rational(factorial(run + 1));
        i = j + 1;
    }
    return prod;
}

std::pair<Sequence, Sequence> coin_pair(long n, const Rational& p) {
    if (n < 0) throw std::invalid_argument("coin_pair: n must be nonnegative");
    const Rational q = Rational(1) - p;
    Sequence abar(static_cast<std::size_t>(n) + 1), bbar(abar.size());
    abar[0] = Rational(1);
    bbar[0] = Rational(1);
    for (std::size_t k = 1; k < abar.size(); ++k) {
        abar[k] = abar[k - 1] * p;
        bbar[k] = bbar[k - 1] * q;
    }
    return {std::move(abar), std::move(bbar)};
}

Rational lattice_path_prob(const std::vector<Step>& path, const Rational& r, const Rational& b) {
    require_positive(r, b);
    Rational prob(1);
    long i = 0, j = 0;
    for (Step s : path) {
        const Rational total = r + b + Rational(i + j);
        if (s == Step::Right) {
            prob *= (r + Rational(i)) / total;
            ++i;
        } else {
            prob *= (b + Rational(j)) / total;
            ++j;
        }
    }
    if (prob != polya_sequence_prob(r, b, i, j))
        throw std::logic_error("lattice_path_prob: path probability is not exchangeable");
    return prob;
}

Rational enumerate_outcomes_bbar(long n, const UrnSpec& spec) {
    spec.validate();
    if (n < 0) throw std::invalid_argument("enumerate_outcomes_bbar: n must be nonnegative");
    const std::size_t m = spec.size();
    if (m > 24) throw std::length_error("enumeration too large");
    const unsigned long choices = (1ul << m) - 1;  // per-step color vectors minus all-red
    Integer total;
    mpz_ui_pow_ui(total.get_mpz_t(), choices, static_cast<unsigned long>(n));
    if (total > 10'000'000) throw std::length_error("enumeration too large");

    // Per-urn table of the exchangeable sequence probability, by black count.
    std::vector<std::vector<Rational>> seq_prob(m);
    for (std::size_t u = 0; u < m; ++u) {
        seq_prob[u].resize(static_cast<std::size_t>(n) + 1);
        for (long blacks = 0; blacks <= n; ++blacks)
            seq_prob[u][static_cast<std::size_t>(blacks)] =
                polya_sequence_prob(spec.urns[u].red, spec.urns[u].black, n - blacks, blacks);
    }

    std::vector<long> blacks(m, 0);
    Rational sum(0);
    auto walk = [&](auto&& self, long step) -> void {
        if (step == n) {
            Rational summand(1);
            for (std::size_t u = 0; u < m; ++u)
                summand *= seq_prob[u][static_cast<std::size_t>(blacks[u])];
            if (!summand.is_positive())
                throw std::logic_error("enumerate_outcomes_bbar: non-positive summand");
            sum += summand;
            return;
        }
        for (unsigned long vec = 1; vec <= choices; ++vec) {
            for (std::size_t u = 0; u < m; ++u)
                if (vec & (1ul << u)) ++blacks[u];
            self(self, step + 1);
            for (std::size_t u = 0; u < m; ++u)
                if (vec & (1ul << u)) --blacks[u];
        }
    };
    walk(walk, 0);
    return sum;
}

}  // namespace sie
