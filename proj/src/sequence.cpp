#include "sie/sequence.hpp"

#include <stdexcept>

#include "sie/combinatorics.hpp"

namespace sie {

namespace {

void require_nonempty(const Sequence& s) {
    if (s.empty()) throw std::invalid_argument("sequence must have length >= 1");
}

// Shared kernel for the three O(N^2) transforms. sign(n, k) supplies the
// summand sign; the Pascal row is grown in place, one row per n.
template <class Sign>
Sequence weighted_transform(const Sequence& s, Sign sign) {
    require_nonempty(s);
    const std::size_t len = s.size();
    Sequence out(len);
    std::vector<Integer> row{Integer(1)};
    for (std::size_t n = 0; n < len; ++n) {
        if (n > 0) {
            row.push_back(Integer(1));
            for (std::size_t j = n - 1; j >= 1; --j) row[j] += row[j - 1];
        }
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational(row[k]) * s[k];
            if (sign(n, k)) term = -term;
            acc += term;
        }
        out[n] = acc;
    }
    return out;
}

}  // namespace

Sequence binomial_transform(const Sequence& b) {
    return weighted_transform(b, [](std::size_t, std::size_t) { return false; });
}

Sequence inverse_binomial_transform(const Sequence& a) {
    return weighted_transform(a, [](std::size_t n, std::size_t k) { return ((n - k) & 1) != 0; });
}

Sequence sie_transform(const Sequence& s) {
    return weighted_transform(s, [](std::size_t, std::size_t k) { return (k & 1) != 0; });
}

bool is_sie_pair(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    require_nonempty(a);
    return sie_transform(b) == a && sie_transform(a) == b;
}

std::pair<Sequence, Sequence> pair_from_seed(const Sequence& seed) {
    require_nonempty(seed);
    const std::size_t len = seed.size();
    const std::size_t N = len - 1;
    Sequence abar(len), bbar(len);
    std::vector<Integer> row{Integer(1)};
    for (std::size_t n = 0; n < len; ++n) {
        if (n > 0) {
            row.push_back(Integer(1));
            for (std::size_t j = n - 1; j >= 1; --j) row[j] += row[j - 1];
        }
        Rational a(0), b(0);
        for (std::size_t k = 0; k <= n; ++k) {
            a += Rational(row[k]) * seed[k];
            b += Rational(row[k]) * seed[N - k];
        }
        abar[N - n] = a;
        bbar[N - n] = b;
    }
    return {std::move(abar), std::move(bbar)};
}

}  // namespace sie
