#pragma once

#include <utility>
#include <vector>

#include "sie/sequence.hpp"

namespace sie {

/// One Polya-Eggenberger urn: r red and b black balls initially, one ball of
/// the drawn color added after each draw. r and b may be any positive
/// rationals; drawing c balls per step is the same model with r/c and b/c.
struct Urn {
    Rational red;
    Rational black;
};

struct UrnSpec {
    std::vector<Urn> urns;

    std::size_t size() const { return urns.size(); }
    /// Throws domain_error("invalid urn parameters") unless nonempty with
    /// all-positive red and black counts.
    void validate() const;
};

/// Probability that the first m+n draws are any particular sequence of m red
/// and n black balls: (r)_m (b)_n / (r+b)_{m+n}.
Rational polya_sequence_prob(const Rational& r, const Rational& b, long m, long n);

/// Probability that n given draws are all red: (r)_n / (r+b)_n.
Rational urn_abar(long n, const Rational& r, const Rational& b);

/// Probability that n given draws are all black: (b)_n / (r+b)_n. Also
/// re-derives the value as the alternating binomial sum over urn_abar terms
/// and insists the two routes agree exactly.
Rational urn_bbar(long n, const Rational& r, const Rational& b);

/// The alternating-sum route alone: sum_k (-1)^k C(n,k) (r)_k/(r+b)_k.
Rational chu_vandermonde_sum(long n, const Rational& r, const Rational& b);

/// Probability that n steps of the multi-urn process draw all-red each step.
Rational multi_urn_abar(long n, const UrnSpec& spec);

/// Probability that each of n steps draws at least one black ball:
/// sum_k (-1)^k C(n,k) prod_i (r_i)_k/(r_i+b_i)_k. Cross-checked exactly
/// against the terminating hypergeometric evaluation of the same quantity.
Rational multi_urn_bbar(long n, const UrnSpec& spec);

/// The alternating-sum route alone, without the hypergeometric cross-check.
Rational multi_urn_bbar_sum(long n, const UrnSpec& spec);

/// Strictly increasing set of positive integers (may be empty).
struct FiniteIndexSet {
    FiniteIndexSet() = default;
    explicit FiniteIndexSet(std::vector<long> m);

    std::vector<long> members;

    bool empty() const { return members.empty(); }
    long max() const;
};

/// Probability that u_i < u_{i+1} for all i in s, for i.i.d. uniform u's.
/// Equals the product of 1/(len+1)! over the maximal runs of consecutive
/// integers in s; 1 for the empty set.
Rational ascent_prob(const FiniteIndexSet& s);

/// The coin pair abar_k = p^k, bbar_k = (1-p)^k for k = 0..n.
std::pair<Sequence, Sequence> coin_pair(long n, const Rational& p);

enum class Step { Right, Up };

/// Probability of a particular lattice path from the origin, moving right
/// with probability (r+i)/(r+b+i+j) and up with probability (b+j)/(r+b+i+j)
/// from (i, j). Path-independence is asserted against polya_sequence_prob.
Rational lattice_path_prob(const std::vector<Step>& path, const Rational& r, const Rational& b);

/// Brute-force route to multi_urn_bbar: enumerates every per-step color
/// vector with at least one black, sums the exact outcome probabilities.
/// Requires (2^m - 1)^n <= 10^7; every summand is checked positive.
Rational enumerate_outcomes_bbar(long n, const UrnSpec& spec);

}  // namespace sie
