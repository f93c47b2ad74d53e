#include "sie/combinatorics.hpp"

namespace sie {

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational rising_factorial(const Rational& u, long n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: n must be nonnegative");
    Rational prod(1);
    Rational factor = u;
    for (long i = 0; i < n; ++i) {
        prod *= factor;
        factor += Rational(1);
    }
    return prod;
}

std::vector<Integer> binomial_row(long n) {
    if (n < 0) throw std::invalid_argument("binomial_row: n must be nonnegative");
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long i = 1; i <= n; ++i) {
        row[static_cast<std::size_t>(i)] = 1;
        for (long j = i - 1; j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row;
}

}  // namespace sie
