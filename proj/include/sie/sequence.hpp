#pragma once

#include <utility>
#include <vector>

#include "sie/rational.hpp"

namespace sie {

/// Finite sequence of rationals, indexed 0..N.
using Sequence = std::vector<Rational>;

/// a_n = sum_{k<=n} C(n,k) b_k.
Sequence binomial_transform(const Sequence& b);

/// b_n = sum_{k<=n} (-1)^(n-k) C(n,k) a_k. Inverse of binomial_transform.
Sequence inverse_binomial_transform(const Sequence& a);

/// t_n = sum_{k<=n} (-1)^k C(n,k) s_k. This map is an involution.
Sequence sie_transform(const Sequence& s);

/// True iff a and b are a symmetric inclusion-exclusion pair, i.e.
/// a = sie_transform(b) and b = sie_transform(a) (both directions checked).
/// Throws on length mismatch.
bool is_sie_pair(const Sequence& a, const Sequence& b);

/// Builds a symmetric pair from an arbitrary seed B_0..B_N:
/// abar_{N-n} = sum_k C(n,k) B_k, bbar_{N-n} = sum_k C(n,k) B_{N-k}.
std::pair<Sequence, Sequence> pair_from_seed(const Sequence& seed);

}  // namespace sie
