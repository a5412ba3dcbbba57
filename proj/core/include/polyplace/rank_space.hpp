#pragma once

#include <cstdint>
#include <optional>

namespace polyplace {

// Rank r in [1, |X|] splits into two symbolic coordinates: end(r) sits just
// below the r-th sorted value and start(r) just above it.
constexpr std::int64_t rank_end(std::int64_t r) { return 2 * r - 1; }
constexpr std::int64_t rank_start(std::int64_t r) { return 2 * r; }

// Closed rectangle [x_lo, x_hi] x [y_lo, y_hi] of integer cells in rank
// space: it covers cells (k, l) for x_lo <= k <= x_hi and y_lo <= l <= y_hi.
struct RankRect {
    std::int64_t x_lo = 1;
    std::int64_t x_hi = 1;
    std::int64_t y_lo = 1;
    std::int64_t y_hi = 1;

    [[nodiscard]] bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
    [[nodiscard]] std::int64_t area() const { return valid() ? (x_hi - x_lo + 1) * (y_hi - y_lo + 1) : 0; }

    friend bool operator==(const RankRect&, const RankRect&) = default;
};

// One cell of an integer grid.
struct Cell {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Half-open block of cells [x0, x1) x [y0, y1).
struct CellRect {
    std::int64_t x0 = 0;
    std::int64_t x1 = 0;
    std::int64_t y0 = 0;
    std::int64_t y1 = 0;

    [[nodiscard]] bool empty() const { return x0 >= x1 || y0 >= y1; }
    [[nodiscard]] std::int64_t area() const { return empty() ? 0 : (x1 - x0) * (y1 - y0); }
    [[nodiscard]] bool contains(const Cell& c) const {
        return x0 <= c.x && c.x < x1 && y0 <= c.y && c.y < y1;
    }

    friend bool operator==(const CellRect&, const CellRect&) = default;
};

inline CellRect to_cells(const RankRect& r) { return {r.x_lo, r.x_hi + 1, r.y_lo, r.y_hi + 1}; }

}  // namespace polyplace
