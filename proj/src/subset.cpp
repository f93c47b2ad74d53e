#include "sie/subset.hpp"

#include <bit>
#include <stdexcept>

namespace sie {

namespace {

constexpr int kParallelThresholdBits = 15;

bool run_parallel(int w, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) return true;
    return exec == Exec::Auto && w >= kParallelThresholdBits;
#else
    (void)w;
    if (exec == Exec::Parallel) throw std::runtime_error("built without OpenMP");
    return false;
#endif
}

// One butterfly pass per dimension. Within a pass all writes hit masks with
// the bit set and all reads hit masks with it clear, so the flattened loop
// is safe to run in parallel and the result does not depend on scheduling.
template <class Combine>
void dimension_passes(std::vector<Rational>& v, int w, bool parallel, Combine combine) {
    const std::int64_t half = static_cast<std::int64_t>(v.size() / 2);
    for (int bit = 0; bit < w; ++bit) {
        const std::int64_t step = std::int64_t{1} << bit;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (std::int64_t i = 0; i < half; ++i) {
            const std::int64_t lo = ((i >> bit) << (bit + 1)) | (i & (step - 1));
            combine(v[static_cast<std::size_t>(lo | step)], v[static_cast<std::size_t>(lo)]);
        }
    }
    (void)parallel;
}

void negate_odd_masks(std::vector<Rational>& v, bool parallel) {
    const std::int64_t n = static_cast<std::int64_t>(v.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t mask = 0; mask < n; ++mask) {
        if (std::popcount(static_cast<std::uint32_t>(mask)) & 1)
            v[static_cast<std::size_t>(mask)] = -v[static_cast<std::size_t>(mask)];
    }
    (void)parallel;
}

}  // namespace

SubsetFunction::SubsetFunction(int w, std::vector<Rational> vals)
    : ground_set_size(w), values(std::move(vals)) {
    if (w < 1 || w > 24) throw std::invalid_argument("ground set size must be in 1..24");
    if (values.size() != (std::size_t{1} << w))
        throw std::invalid_argument("subset function needs exactly 2^w values");
}

SubsetFunction subset_zeta(SubsetFunction b, Exec exec) {
    const bool par = run_parallel(b.ground_set_size, exec);
    dimension_passes(b.values, b.ground_set_size, par,
                     [](Rational& hi, const Rational& lo) { hi += lo; });
    return b;
}

SubsetFunction subset_moebius(SubsetFunction a, Exec exec) {
    const bool par = run_parallel(a.ground_set_size, exec);
    dimension_passes(a.values, a.ground_set_size, par,
                     [](Rational& hi, const Rational& lo) { hi -= lo; });
    return a;
}

SubsetFunction subset_sie_transform(SubsetFunction s, Exec exec) {
    const bool par = run_parallel(s.ground_set_size, exec);
    negate_odd_masks(s.values, par);
    dimension_passes(s.values, s.ground_set_size, par,
                     [](Rational& hi, const Rational& lo) { hi += lo; });
    return s;
}

std::pair<SubsetFunction, SubsetFunction> subset_pair_from_seed(const SubsetFunction& seed) {
    const std::uint32_t full = seed.full_mask();
    auto reindex_by_complement = [&](const SubsetFunction& f) {
        SubsetFunction out = f;
        for (std::uint32_t mask = 0; mask <= full; ++mask)
            out.values[mask] = f.values[full ^ mask];
        return out;
    };
    // abar(S) sums the seed over subsets of the complement of S; bbar(S)
    // equivalently sums it over the supersets of S.
    SubsetFunction abar = reindex_by_complement(subset_zeta(seed));
    SubsetFunction bbar = reindex_by_complement(subset_zeta(reindex_by_complement(seed)));
    return {std::move(abar), std::move(bbar)};
}

namespace reference {

namespace {

template <class Sign>
SubsetFunction submask_sum(const SubsetFunction& f, Sign sign) {
    SubsetFunction out = f;
    const std::uint32_t full = f.full_mask();
    for (std::uint32_t mask = 0;; ++mask) {
        Rational acc(0);
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            if (sign(mask, sub))
                acc -= f.values[sub];
            else
                acc += f.values[sub];
            if (sub == 0) break;
        }
        out.values[mask] = acc;
        if (mask == full) break;
    }
    return out;
}

}  // namespace

SubsetFunction subset_zeta(const SubsetFunction& b) {
    return submask_sum(b, [](std::uint32_t, std::uint32_t) { return false; });
}

SubsetFunction subset_moebius(const SubsetFunction& a) {
    return submask_sum(a, [](std::uint32_t mask, std::uint32_t sub) {
        return ((std::popcount(mask) - std::popcount(sub)) & 1) != 0;
    });
}

SubsetFunction subset_sie_transform(const SubsetFunction& s) {
    return submask_sum(
        s, [](std::uint32_t, std::uint32_t sub) { return (std::popcount(sub) & 1) != 0; });
}

}  // namespace reference

}  // namespace sie
