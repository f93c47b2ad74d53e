#pragma once

#include <optional>
#include <utility>

#include "sie/sequence.hpp"

namespace sie {

/// Triangular array of rationals in one of two orientations.
///
/// difference: rows[0] is the top row; rows[i+1][j] = rows[i][j+1] - rows[i][j].
/// rotated: rows are indexed from the apex (row i has i+1 entries) and every
/// entry above the bottom row is the sum of the two entries below it:
/// rows[i][j] = rows[i+1][j] + rows[i+1][j+1]. A rotated triangle may carry
/// extra appended rows below the original bottom row.
struct DifferenceTriangle {
    enum class Orientation { difference, rotated };

    Orientation orientation = Orientation::difference;
    std::vector<Sequence> rows;
};

/// Builds the difference table with `top` as the zeroth row.
DifferenceTriangle difference_triangle(const Sequence& top);

/// Leading entries of each row of a difference-orientation triangle; equals
/// inverse_binomial_transform of the top row.
Sequence zeroth_diagonal(const DifferenceTriangle& t);

/// Rotates a difference-orientation triangle 60 degrees counterclockwise.
/// The left diagonal of the result is the reversed top row, the right
/// diagonal is its sie_transform, and the bottom row is the zeroth diagonal.
DifferenceTriangle rotate_triangle(const DifferenceTriangle& t);

Sequence left_diagonal(const DifferenceTriangle& t);
Sequence right_diagonal(const DifferenceTriangle& t);
const Sequence& bottom_row(const DifferenceTriangle& t);

/// New bottom row e with e_0 = leftmost and e_{i+1} = bottom_i - e_i, so the
/// two-below sum invariant holds between the rows.
Sequence extend_rotated_row(const Sequence& bottom, const Rational& leftmost);

/// Appends extend_rotated_row(bottom_row(t), leftmost) to a rotated triangle.
void append_rotated_row(DifferenceTriangle& t, const Rational& leftmost);

/// Exact closed interval of leftmost values for which extend_rotated_row
/// yields an all-nonnegative row, or nullopt when no such value exists.
std::optional<std::pair<Rational, Rational>> nonneg_extension_interval(const Sequence& bottom);

}  // namespace sie
