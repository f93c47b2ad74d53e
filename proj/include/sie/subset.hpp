#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sie/exec.hpp"
#include "sie/rational.hpp"

namespace sie {

/// Function on the subsets of a ground set of w elements (1 <= w <= 24).
/// Subsets are encoded as bit-masks: bit i of a mask is membership of
/// element i; values is the dense table indexed by mask 0..2^w-1.
struct SubsetFunction {
    SubsetFunction(int w, std::vector<Rational> vals);

    int ground_set_size;
    std::vector<Rational> values;

    std::uint32_t full_mask() const { return (std::uint32_t{1} << ground_set_size) - 1; }

    friend bool operator==(const SubsetFunction&, const SubsetFunction&) = default;
};

/// A(S) = sum_{T subseteq S} B(T).
SubsetFunction subset_zeta(SubsetFunction b, Exec exec = Exec::Auto);

/// B(S) = sum_{T subseteq S} (-1)^{|S|-|T|} A(T). Inverse of subset_zeta.
SubsetFunction subset_moebius(SubsetFunction a, Exec exec = Exec::Auto);

/// t(S) = sum_{T subseteq S} (-1)^{|T|} s(T). This map is an involution.
SubsetFunction subset_sie_transform(SubsetFunction s, Exec exec = Exec::Auto);

/// Builds a symmetric pair from an arbitrary seed B:
/// abar(S) = sum_{T subseteq complement(S)} B(T) and
/// bbar(S) = sum_{T subseteq complement(S)} B(complement(T)), i.e. the sum of
/// B over the supersets of S. The pair satisfies the symmetric relation in
/// both directions.
std::pair<SubsetFunction, SubsetFunction> subset_pair_from_seed(const SubsetFunction& seed);

/// Naive O(3^w) submask-sum implementations, kept as the serial reference
/// the fast kernels are tested against.
namespace reference {
SubsetFunction subset_zeta(const SubsetFunction& b);
SubsetFunction subset_moebius(const SubsetFunction& a);
SubsetFunction subset_sie_transform(const SubsetFunction& s);
}  // namespace reference

}  // namespace sie
