#include "sie/power_series.hpp"

#include <stdexcept>

#include "sie/combinatorics.hpp"

namespace sie {

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

PowerSeries PowerSeries::negate_argument() const {
    PowerSeries out = *this;
    for (std::size_t k = 1; k < out.coeff_.size(); k += 2) out.coeff_[k] = -out.coeff_[k];
    return out;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries out = *this;
    for (int k = 0; k <= order(); ++k) out[k] += o[k];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries out = *this;
    for (int k = 0; k <= order(); ++k) out[k] -= o[k];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries out(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeff_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j)
            out[i + j] += coeff_[static_cast<std::size_t>(i)] * o[j];
    }
    return out;
}

PowerSeries PowerSeries::exp(int order) {
    PowerSeries e(order);
    for (int k = 0; k <= order; ++k) e[k] = Rational(1) / Rational(factorial(k));
    return e;
}

PowerSeries egf_of(const Sequence& a, int order) {
    if (order < 0 || static_cast<std::size_t>(order) >= a.size())
        throw std::invalid_argument("order too large");
    PowerSeries f(order);
    for (int k = 0; k <= order; ++k)
        f[k] = a[static_cast<std::size_t>(k)] / Rational(factorial(k));
    return f;
}

}  // namespace sie
