#include "polyplace/cover_static.hpp"

#include <algorithm>
#include <vector>

#include "polyplace/cover_tree.hpp"

namespace polyplace {
namespace {

template <class T>
struct Box {
    T x0, x1, y0, y1;
};

template <class T>
struct Event {
    T x;
    std::size_t y_lo;
    std::size_t y_hi;
    int delta;
};

// Clipped sweep state shared by the measure and hole queries.
template <class T>
struct Sweep {
    CoverLengthTree<T> tree;
    std::vector<Event<T>> events;
};

template <class T>
Sweep<T> build_sweep(const std::vector<Box<T>>& rects, const Box<T>& box) {
    std::vector<Box<T>> clipped;
    clipped.reserve(rects.size());
    std::vector<T> ys{box.y0, box.y1};
    for (const Box<T>& r : rects) {
        Box<T> c{std::max(r.x0, box.x0), std::min(r.x1, box.x1), std::max(r.y0, box.y0),
                 std::min(r.y1, box.y1)};
        if (!(c.x0 < c.x1) || !(c.y0 < c.y1)) continue;
        ys.push_back(c.y0);
        ys.push_back(c.y1);
        clipped.push_back(std::move(c));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    Sweep<T> s{CoverLengthTree<T>(ys), {}};
    s.events.reserve(2 * clipped.size());
    for (Box<T>& c : clipped) {
        const std::size_t lo = s.tree.index_of(c.y0);
        const std::size_t hi = s.tree.index_of(c.y1);
        s.events.push_back({c.x0, lo, hi, +1});
        s.events.push_back({std::move(c.x1), lo, hi, -1});
    }
    std::sort(s.events.begin(), s.events.end(),
              [](const Event<T>& a, const Event<T>& b) { return a.x < b.x; });
    return s;
}

template <class T>
T sweep_area(const std::vector<Box<T>>& rects, const Box<T>& box) {
    if (!(box.x0 < box.x1) || !(box.y0 < box.y1)) return T{};
    Sweep<T> s = build_sweep(rects, box);
    T area{};
    std::size_t i = 0;
    while (i < s.events.size()) {
        const T x = s.events[i].x;
        while (i < s.events.size() && s.events[i].x == x) {
            s.tree.add(s.events[i].y_lo, s.events[i].y_hi, s.events[i].delta);
            ++i;
        }
        if (i < s.events.size()) {
            area += s.tree.covered() * (s.events[i].x - x);
        }
    }
    return area;
}

// Returns (slab start, slab end, elementary y index) of the leftmost slab that
// is not fully covered.
template <class T>
struct HoleSlab {
    T x_lo;
    T x_hi;
    T y_lo;
    T y_hi;
};

template <class T>
std::optional<HoleSlab<T>> sweep_hole(const std::vector<Box<T>>& rects, const Box<T>& box) {
    if (!(box.x0 < box.x1) || !(box.y0 < box.y1)) return std::nullopt;
    Sweep<T> s = build_sweep(rects, box);
    const auto& ys = s.tree.coords();
    T cursor = box.x0;
    std::size_t i = 0;
    while (cursor < box.x1) {
        while (i < s.events.size() && s.events[i].x == cursor) {
            s.tree.add(s.events[i].y_lo, s.events[i].y_hi, s.events[i].delta);
            ++i;
        }
        const T next = i < s.events.size() ? s.events[i].x : box.x1;
        if (cursor < next) {
            if (auto idx = s.tree.first_uncovered()) {
                return HoleSlab<T>{cursor, next, ys[*idx], ys[*idx + 1]};
            }
        }
        cursor = next;
    }
    return std::nullopt;
}

std::vector<Box<Rational>> boxes_of(std::span<const AxisRect> rects) {
    std::vector<Box<Rational>> out;
    out.reserve(rects.size());
    for (const AxisRect& r : rects) out.push_back({r.x0, r.x1, r.y0, r.y1});
    return out;
}

std::vector<Box<std::int64_t>> boxes_of(std::span<const CellRect> rects) {
    std::vector<Box<std::int64_t>> out;
    out.reserve(rects.size());
    for (const CellRect& r : rects) out.push_back({r.x0, r.x1, r.y0, r.y1});
    return out;
}

std::vector<Box<std::int64_t>> boxes_of(std::span<const RankRect> rects) {
    std::vector<Box<std::int64_t>> out;
    out.reserve(rects.size());
    for (const RankRect& r : rects) {
        if (r.valid()) out.push_back({r.x_lo, r.x_hi + 1, r.y_lo, r.y_hi + 1});
    }
    return out;
}

// Piece index of the first / last piece an open interval (a, b) covers, over
// breakpoints v: piece 2k is the point v[k], piece 2k+1 the gap (v[k], v[k+1]).
std::int64_t first_piece(const std::vector<Rational>& v, const Rational& a) {
    const auto it = std::lower_bound(v.begin(), v.end(), a);
    const auto k = static_cast<std::int64_t>(it - v.begin());
    if (it != v.end() && *it == a) return 2 * k + 1;
    return 2 * k;
}

std::int64_t last_piece(const std::vector<Rational>& v, const Rational& b) {
    const auto it = std::lower_bound(v.begin(), v.end(), b);
    const auto k = static_cast<std::int64_t>(it - v.begin());
    if (it != v.end() && *it == b) return 2 * k - 1;
    return 2 * k - 2;
}

Rational piece_value(const std::vector<Rational>& v, std::int64_t piece) {
    const auto k = static_cast<std::size_t>(piece / 2);
    if (piece % 2 == 0) return v[k];
    return midpoint(v[k], v[k + 1]);
}

std::vector<Rational> breakpoints(const Rational& lo, const Rational& hi, std::vector<Rational> inner) {
    std::vector<Rational> v{lo, hi};
    for (Rational& x : inner) {
        if (lo < x && x < hi) v.push_back(std::move(x));
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

Rational union_area(std::span<const AxisRect> rects, const AxisRect& box) {
    return sweep_area(boxes_of(rects), Box<Rational>{box.x0, box.x1, box.y0, box.y1});
}

bool covers_box(std::span<const AxisRect> rects, const AxisRect& box) {
    return union_area(rects, box) == box.area();
}

std::optional<Point> find_hole(std::span<const AxisRect> rects, const AxisRect& box) {
    auto slab = sweep_hole(boxes_of(rects), Box<Rational>{box.x0, box.x1, box.y0, box.y1});
    if (!slab) return std::nullopt;
    return Point{midpoint(slab->x_lo, slab->x_hi), midpoint(slab->y_lo, slab->y_hi)};
}

std::int64_t union_area(std::span<const RankRect> rects, const RankRect& box) {
    return sweep_area(boxes_of(rects), Box<std::int64_t>{box.x_lo, box.x_hi + 1, box.y_lo, box.y_hi + 1});
}

bool covers_box(std::span<const RankRect> rects, const RankRect& box) {
    return union_area(rects, box) == box.area();
}

std::optional<Cell> find_hole(std::span<const RankRect> rects, const RankRect& box) {
    auto slab = sweep_hole(boxes_of(rects), Box<std::int64_t>{box.x_lo, box.x_hi + 1, box.y_lo, box.y_hi + 1});
    if (!slab) return std::nullopt;
    return Cell{slab->x_lo, slab->y_lo};
}

std::int64_t union_cells(std::span<const CellRect> rects, const CellRect& box) {
    return sweep_area(boxes_of(rects), Box<std::int64_t>{box.x0, box.x1, box.y0, box.y1});
}

std::optional<Cell> first_uncovered_cell(std::span<const CellRect> rects, const CellRect& box) {
    auto slab = sweep_hole(boxes_of(rects), Box<std::int64_t>{box.x0, box.x1, box.y0, box.y1});
    if (!slab) return std::nullopt;
    return Cell{slab->x_lo, slab->y_lo};
}

std::optional<Point> find_open_hole(std::span<const OpenRect> rects, const AxisRect& box) {
    std::vector<Rational> inner_x;
    std::vector<Rational> inner_y;
    inner_x.reserve(2 * rects.size());
    inner_y.reserve(2 * rects.size());
    for (const OpenRect& r : rects) {
        if (r.empty()) continue;
        inner_x.push_back(r.x0);
        inner_x.push_back(r.x1);
        inner_y.push_back(r.y0);
        inner_y.push_back(r.y1);
    }
    const std::vector<Rational> vx = breakpoints(box.x0, box.x1, std::move(inner_x));
    const std::vector<Rational> vy = breakpoints(box.y0, box.y1, std::move(inner_y));
    const auto px = static_cast<std::int64_t>(2 * vx.size() - 1);
    const auto py = static_cast<std::int64_t>(2 * vy.size() - 1);

    std::vector<CellRect> cells;
    cells.reserve(rects.size());
    for (const OpenRect& r : rects) {
        if (r.empty()) continue;
        const std::int64_t x_lo = std::max<std::int64_t>(first_piece(vx, r.x0), 0);
        const std::int64_t x_hi = std::min<std::int64_t>(last_piece(vx, r.x1), px - 1);
        const std::int64_t y_lo = std::max<std::int64_t>(first_piece(vy, r.y0), 0);
        const std::int64_t y_hi = std::min<std::int64_t>(last_piece(vy, r.y1), py - 1);
        if (x_lo > x_hi || y_lo > y_hi) continue;
        cells.push_back({x_lo, x_hi + 1, y_lo, y_hi + 1});
    }
    auto hole = first_uncovered_cell(cells, CellRect{0, px, 0, py});
    if (!hole) return std::nullopt;
    return Point{piece_value(vx, hole->x), piece_value(vy, hole->y)};
}

}  // namespace polyplace
