#include "sie/hypergeometric.hpp"

#include <optional>
#include <stdexcept>

#include "sie/combinatorics.hpp"

namespace sie {

namespace {

// Smallest n >= 0 with -n among the upper parameters.
std::optional<long> termination_index(const std::vector<Rational>& upper) {
    std::optional<long> best;
    for (const Rational& u : upper) {
        if (!u.is_integer() || u.is_positive()) continue;
        const Integer num = u.numerator();
        if (!num.fits_slong_p()) continue;  // too deep to ever sum
        const long n = -num.get_si();
        if (!best || n < *best) best = n;
    }
    return best;
}

}  // namespace

Rational eval_terminating_pFq(const HypergeometricSpec& spec) {
    const auto n = termination_index(spec.upper);
    if (!n) throw std::domain_error("series does not terminate");
    Rational sum(1);
    Rational term(1);
    for (long k = 0; k < *n; ++k) {
        Rational num(1), den(Rational(k + 1));
        for (const Rational& u : spec.upper) num *= u + Rational(k);
        for (const Rational& v : spec.lower) den *= v + Rational(k);
        if (den.is_zero()) throw std::domain_error("lower parameter pole");
        term *= spec.argument * num / den;
        sum += term;
    }
    return sum;
}

HypergeometricSpec multi_urn_hypergeometric_spec(long n, const UrnSpec& spec) {
    HypergeometricSpec h;
    h.upper.push_back(Rational(-n));
    for (const Urn& u : spec.urns) {
        h.upper.push_back(u.red);
        h.lower.push_back(u.red + u.black);
    }
    h.argument = Rational(1);
    return h;
}

bool egf_pair_check(const Sequence& a, const Sequence& b, bool symmetric, int order) {
    if (order < 0 || static_cast<std::size_t>(order) >= a.size() ||
        static_cast<std::size_t>(order) >= b.size())
        throw std::invalid_argument("order too large");
    const PowerSeries fa = egf_of(a, order);
    const PowerSeries fb = egf_of(b, order);
    const PowerSeries ex = PowerSeries::exp(order);
    if (symmetric)
        return fa == ex * fb.negate_argument() && fb == ex * fa.negate_argument();
    return fa == ex * fb && fb == ex.negate_argument() * fa;
}

namespace {

// 1F1(a; c | x) as a truncated series; coefficient k is (a)_k / ((c)_k k!).
PowerSeries confluent_series(const Rational& a, const Rational& c, int order) {
    PowerSeries f(order);
    Rational term(1);
    f[0] = term;
    for (int k = 0; k < order; ++k) {
        const Rational den = (c + Rational(k)) * Rational(k + 1);
        if (den.is_zero()) throw std::domain_error("lower parameter pole");
        term *= (a + Rational(k)) / den;
        f[k + 1] = term;
    }
    return f;
}

}  // namespace

std::pair<PowerSeries, PowerSeries> f11_transform_sides(const Rational& b, const Rational& r,
                                                        int order) {
    const PowerSeries lhs = confluent_series(b, b + r, order);
    const PowerSeries rhs =
        PowerSeries::exp(order) * confluent_series(r, b + r, order).negate_argument();
    return {lhs, rhs};
}

bool f11_transform_check(const Rational& b, const Rational& r, int order) {
    const auto [lhs, rhs] = f11_transform_sides(b, r, order);
    return lhs == rhs;
}

Rational f32_trinomial_rhs(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                           const Rational& b2) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!r1.is_positive() || !b1.is_positive() || !r2.is_positive() || !b2.is_positive())
        throw std::domain_error("invalid urn parameters");
    const Rational den = rising_factorial(r1 + b1, n) * rising_factorial(r2 + b2, n);
    const Integer nfact = factorial(n);
    Rational sum(0);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j) {
            const long k = n - i - j;
            const Rational coeff(nfact / (factorial(i) * factorial(j) * factorial(k)));
            sum += coeff * rising_factorial(r1, i) * rising_factorial(b1, j + k) *
                   rising_factorial(r2, j) * rising_factorial(b2, i + k) / den;
        }
    return sum;
}

Rational f32_single_sum(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                        const Rational& b2) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!r1.is_positive() || !b1.is_positive() || !r2.is_positive() || !b2.is_positive())
        throw std::domain_error("invalid urn parameters");
    const Rational den1 = rising_factorial(r1 + b1, n);
    Rational sum(0);
    for (long i = 0; i <= n; ++i)
        sum += Rational(binomial(n, i)) * rising_factorial(r1, i) * rising_factorial(b1, n - i) *
               rising_factorial(b2, i) / (den1 * rising_factorial(r2 + b2, i));
    return sum;
}

std::pair<Rational, Rational> f32_gasper_sides(long n, const Rational& r1, const Rational& b1,
                                               const Rational& r2, const Rational& b2) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    HypergeometricSpec lhs{{Rational(-n), r1, r2}, {r1 + b1, r2 + b2}, Rational(1)};
    HypergeometricSpec rhs{{Rational(-n), r1, b2}, {Rational(1) - b1 - Rational(n), r2 + b2},
                           Rational(1)};
    const Rational prefactor = rising_factorial(b1, n) / rising_factorial(r1 + b1, n);
    return {eval_terminating_pFq(lhs), prefactor * eval_terminating_pFq(rhs)};
}

bool f32_gasper_check(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                      const Rational& b2) {
    const auto [lhs, rhs] = f32_gasper_sides(n, r1, b1, r2, b2);
    return lhs == rhs;
}

Rational u_number(long m, long n, const Rational& r) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
    Rational sum(0);
    Integer coeff(1);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) coeff = coeff * Integer(n - k + 1) / Integer(k);
        const Rational rk = r + Rational(k);
        if (rk.is_zero()) throw std::domain_error("pole");
        const Rational ratio = (r / rk).pow(static_cast<unsigned long>(m));
        sum += (k & 1 ? -Rational(coeff) : Rational(coeff)) * ratio;
    }
    return sum;
}

std::pair<PowerSeries, PowerSeries> u_gf_sides(long n, const Rational& r, int order) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    // C(r+n, n) for rational r is (r+1)_n / n!.
    const Rational binom = rising_factorial(r + Rational(1), n) / Rational(factorial(n));

    PowerSeries lhs(order);
    Rational r_pow(1);
    for (int m = 1; m <= order; ++m) {
        r_pow *= r;
        if (r_pow.is_zero()) throw std::domain_error("pole");
        lhs[m] = r * binom * u_number(m, n, r) / r_pow;
    }

    // z / prod_{j=0}^n (1 - z/(r+j)); each factor expands as the geometric
    // series in z/(r+j).
    PowerSeries prod(order);
    prod[0] = Rational(1);
    for (long j = 0; j <= n; ++j) {
        const Rational pole = r + Rational(j);
        if (pole.is_zero()) throw std::domain_error("pole");
        PowerSeries geo(order);
        Rational c(1);
        geo[0] = c;
        for (int k = 1; k <= order; ++k) {
            c /= pole;
            geo[k] = c;
        }
        prod = prod * geo;
    }
    PowerSeries rhs(order);
    for (int k = 1; k <= order; ++k) rhs[k] = prod[k - 1];
    return {lhs, rhs};
}

bool u_gf_check(long n, const Rational& r, int order) {
    const auto [lhs, rhs] = u_gf_sides(n, r, order);
    return lhs == rhs;
}

PositivityReport positivity_scan(long n_max, const std::vector<UrnSpec>& specs) {
    PositivityReport report;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (long n = 0; n <= n_max; ++n) {
            const Rational value = multi_urn_bbar(n, specs[i]);
            ++report.evaluations;
            if (!value.is_positive()) report.violations.push_back({i, n, value});
        }
    }
    return report;
}

}  // namespace sie
