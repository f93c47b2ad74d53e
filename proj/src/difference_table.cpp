#include "sie/difference_table.hpp"

#include <stdexcept>

namespace sie {

namespace {

void require_orientation(const DifferenceTriangle& t, DifferenceTriangle::Orientation want,
                         const char* what) {
    if (t.orientation != want) throw std::invalid_argument(what);
}

}  // namespace

DifferenceTriangle difference_triangle(const Sequence& top) {
    if (top.empty()) throw std::invalid_argument("sequence must have length >= 1");
    DifferenceTriangle t;
    t.orientation = DifferenceTriangle::Orientation::difference;
    t.rows.push_back(top);
    while (t.rows.back().size() > 1) {
        const Sequence& prev = t.rows.back();
        Sequence next(prev.size() - 1);
        for (std::size_t j = 0; j + 1 < prev.size(); ++j) next[j] = prev[j + 1] - prev[j];
        t.rows.push_back(std::move(next));
    }
    return t;
}

Sequence zeroth_diagonal(const DifferenceTriangle& t) {
    require_orientation(t, DifferenceTriangle::Orientation::difference,
                        "zeroth_diagonal requires difference orientation");
    Sequence d(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) d[i] = t.rows[i].front();
    return d;
}

DifferenceTriangle rotate_triangle(const DifferenceTriangle& t) {
    require_orientation(t, DifferenceTriangle::Orientation::difference,
                        "rotate_triangle requires difference orientation");
    const std::size_t N = t.rows.size() - 1;
    DifferenceTriangle r;
    r.orientation = DifferenceTriangle::Orientation::rotated;
    r.rows.resize(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        Sequence row(i + 1);
        for (std::size_t j = 0; j <= i; ++j) row[j] = t.rows[j][N - i];
        r.rows[i] = std::move(row);
    }
    return r;
}

Sequence left_diagonal(const DifferenceTriangle& t) {
    require_orientation(t, DifferenceTriangle::Orientation::rotated,
                        "left_diagonal requires rotated orientation");
    Sequence d(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) d[i] = t.rows[i].front();
    return d;
}

Sequence right_diagonal(const DifferenceTriangle& t) {
    require_orientation(t, DifferenceTriangle::Orientation::rotated,
                        "right_diagonal requires rotated orientation");
    Sequence d(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) d[i] = t.rows[i].back();
    return d;
}

const Sequence& bottom_row(const DifferenceTriangle& t) {
    if (t.rows.empty()) throw std::invalid_argument("empty triangle");
    return t.rows.back();
}

Sequence extend_rotated_row(const Sequence& bottom, const Rational& leftmost) {
    Sequence e(bottom.size() + 1);
    e[0] = leftmost;
    for (std::size_t i = 0; i < bottom.size(); ++i) e[i + 1] = bottom[i] - e[i];
    return e;
}

void append_rotated_row(DifferenceTriangle& t, const Rational& leftmost) {
    require_orientation(t, DifferenceTriangle::Orientation::rotated,
                        "append_rotated_row requires rotated orientation");
    t.rows.push_back(extend_rotated_row(bottom_row(t), leftmost));
}

std::optional<std::pair<Rational, Rational>> nonneg_extension_interval(const Sequence& bottom) {
    if (bottom.empty()) throw std::invalid_argument("sequence must have length >= 1");
    // With x = e_0 the extension satisfies e_{i+1} = s_i + (-1)^{i+1} x, where
    // s_i = bottom_i - s_{i-1} is the alternating partial sum. The constraints
    // e_k >= 0 therefore alternate between upper and lower bounds on x.
    Rational lo(0);
    bool has_hi = false;
    Rational hi;
    Rational s(0);
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        s = bottom[i] - s;
        if (i % 2 == 0) {
            if (!has_hi || s < hi) {
                hi = s;
                has_hi = true;
            }
        } else if (-s > lo) {
            lo = -s;
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

}  // namespace sie
