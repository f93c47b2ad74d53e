#pragma once

#include <utility>
#include <vector>

#include "sie/power_series.hpp"
#include "sie/sequence.hpp"
#include "sie/urns.hpp"

namespace sie {

/// Parameters of a hypergeometric series pFq(upper; lower | argument).
/// Evaluation requires termination: some upper parameter must be a
/// nonpositive integer.
struct HypergeometricSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
};

/// Exact value of a terminating pFq: sum_{k=0}^n prod(u_i)_k / prod(v_j)_k
/// * x^k / k!, where n is the smallest nonnegative integer with -n among the
/// upper parameters. Throws domain_error("series does not terminate") when
/// no upper parameter is a nonpositive integer, and
/// domain_error("lower parameter pole") when a zero lower-parameter factor
/// is consumed before the terminating index.
Rational eval_terminating_pFq(const HypergeometricSpec& spec);

/// The (m+1)Fm spec whose value is multi_urn_bbar(n, spec):
/// upper (-n, r_1..r_m), lower (r_1+b_1..r_m+b_m), argument 1.
HypergeometricSpec multi_urn_hypergeometric_spec(long n, const UrnSpec& spec);

/// Checks the exponential-generating-function relation between a pair of
/// sequences through the given truncation order, coefficient-wise exactly.
/// symmetric: F_a(x) = e^x F_b(-x) and F_b(x) = e^x F_a(-x).
/// asymmetric: F_a(x) = e^x F_b(x) and F_b(x) = e^-x F_a(x).
bool egf_pair_check(const Sequence& a, const Sequence& b, bool symmetric, int order);

/// Both sides of 1F1(b; b+r | x) = e^x 1F1(r; b+r | -x) through `order`.
std::pair<PowerSeries, PowerSeries> f11_transform_sides(const Rational& b, const Rational& r,
                                                        int order);
bool f11_transform_check(const Rational& b, const Rational& r, int order);

/// sum over i+j+k = n of n!/(i! j! k!) *
/// (r1)_i (b1)_{j+k} / (r1+b1)_n * (r2)_j (b2)_{i+k} / (r2+b2)_n.
Rational f32_trinomial_rhs(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                           const Rational& b2);

/// sum_{i<=n} C(n,i) (r1)_i (b1)_{n-i} (b2)_i / ((r1+b1)_n (r2+b2)_i).
Rational f32_single_sum(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                        const Rational& b2);

/// Both sides of 3F2(-n, r1, r2; r1+b1, r2+b2 | 1)
/// = (b1)_n/(r1+b1)_n * 3F2(-n, r1, b2; 1-b1-n, r2+b2 | 1).
std::pair<Rational, Rational> f32_gasper_sides(long n, const Rational& r1, const Rational& b1,
                                               const Rational& r2, const Rational& b2);
bool f32_gasper_check(long n, const Rational& r1, const Rational& b1, const Rational& r2,
                      const Rational& b2);

/// U_{m,n}(r) = sum_k (-1)^k C(n,k) (r/(r+k))^m. Throws
/// domain_error("pole") if r + k = 0 for some 0 <= k <= n.
Rational u_number(long m, long n, const Rational& r);

/// Both sides of the U-number generating function in z through `order`:
/// r * C(r+n, n) * sum_{m>=1} U_{m,n}(r) (z/r)^m = z / prod_{j=0}^n (1 - z/(r+j)),
/// with C(r+n, n) = (r+1)_n / n!.
std::pair<PowerSeries, PowerSeries> u_gf_sides(long n, const Rational& r, int order);
bool u_gf_check(long n, const Rational& r, int order);

struct PositivityViolation {
    std::size_t spec_index;
    long n;
    Rational value;
};

struct PositivityReport {
    long evaluations = 0;
    std::vector<PositivityViolation> violations;

    bool all_positive() const { return violations.empty(); }
};

/// Evaluates multi_urn_bbar for each spec and every n <= n_max and records
/// any non-positive value (expected: none, for positive urn parameters).
PositivityReport positivity_scan(long n_max, const std::vector<UrnSpec>& specs);

}  // namespace sie
