#pragma once

#include <vector>

#include "sie/sequence.hpp"

namespace sie {

/// Truncated formal power series with exact rational coefficients c_0..c_K.
/// All arithmetic is exact through the truncation order; higher-order terms
/// are discarded. Binary operations require equal orders.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeff_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("order must be nonnegative");
    }
    explicit PowerSeries(std::vector<Rational> coefficients);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    const Rational& operator[](int k) const { return coeff_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeff_.at(static_cast<std::size_t>(k)); }

    /// The series with x replaced by -x.
    PowerSeries negate_argument() const;

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// e^x truncated at the given order.
    static PowerSeries exp(int order);

private:
    std::vector<Rational> coeff_;
};

/// Exponential generating function of a sequence: coefficient k is a_k/k!.
/// Requires order <= len(a) - 1.
PowerSeries egf_of(const Sequence& a, int order);

}  // namespace sie
