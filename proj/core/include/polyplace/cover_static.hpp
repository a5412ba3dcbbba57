#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "polyplace/geometry.hpp"
#include "polyplace/rank_space.hpp"

namespace polyplace {

// Klee's measure for a static rectangle set, clipped to a box: x-sweep over
// compressed coordinates with a covered-length segment tree over y.

// Closed real rectangles.
Rational union_area(std::span<const AxisRect> rects, const AxisRect& box);
bool covers_box(std::span<const AxisRect> rects, const AxisRect& box);
// A point of positive-measure uncovered region, if any.
std::optional<Point> find_hole(std::span<const AxisRect> rects, const AxisRect& box);

// Closed rank-space rectangles, measured in cells (see RankRect).
std::int64_t union_area(std::span<const RankRect> rects, const RankRect& box);
bool covers_box(std::span<const RankRect> rects, const RankRect& box);
// Lexicographically smallest uncovered cell (x first, then y).
std::optional<Cell> find_hole(std::span<const RankRect> rects, const RankRect& box);

// Unit-square blocks.
std::int64_t union_cells(std::span<const CellRect> rects, const CellRect& box);
std::optional<Cell> first_uncovered_cell(std::span<const CellRect> rects, const CellRect& box);

// Open rectangle (x0, x1) x (y0, y1) in real coordinates.
struct OpenRect {
    Rational x0;
    Rational x1;
    Rational y0;
    Rational y1;

    [[nodiscard]] bool empty() const { return x0 >= x1 || y0 >= y1; }
    [[nodiscard]] bool contains(const Point& p) const {
        return x0 < p.x && p.x < x1 && y0 < p.y && p.y < y1;
    }
};

// Point of the closed box not covered by any open rectangle, including
// measure-zero holes (isolated points and segments). Coordinates are refined
// into alternating point/open-interval pieces, so the search is exact.
std::optional<Point> find_open_hole(std::span<const OpenRect> rects, const AxisRect& box);

}  // namespace polyplace
