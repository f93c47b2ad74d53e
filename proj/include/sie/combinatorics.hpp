#pragma once

#include <vector>

#include "sie/rational.hpp"

namespace sie {

/// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Integer binomial(long n, long k);

/// n! for n >= 0.
Integer factorial(long n);

/// Rising factorial (u)_n = u(u+1)...(u+n-1); (u)_0 = 1.
Rational rising_factorial(const Rational& u, long n);

/// Row n of Pascal's triangle: C(n, 0..n).
std::vector<Integer> binomial_row(long n);

}  // namespace sie
