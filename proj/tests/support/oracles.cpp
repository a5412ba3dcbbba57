#include "support/oracles.hpp"

#include <algorithm>

namespace oracle {
namespace {

std::vector<Rational> compress(std::vector<Rational> v, const Rational& lo, const Rational& hi) {
    v.push_back(lo);
    v.push_back(hi);
    std::vector<Rational> out;
    for (Rational& x : v) {
        if (lo <= x && x <= hi) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> probes(const std::vector<Rational>& v) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v[i]);
        if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / Rational(2));
    }
    return out;
}

}  // namespace

Rational grid_union_area(std::span<const AxisRect> rects, const AxisRect& box) {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (const AxisRect& r : rects) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
        ys.push_back(r.y0);
        ys.push_back(r.y1);
    }
    xs = compress(std::move(xs), box.x0, box.x1);
    ys = compress(std::move(ys), box.y0, box.y1);
    Rational total;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational cx = (xs[i] + xs[i + 1]) / Rational(2);
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const Rational cy = (ys[j] + ys[j + 1]) / Rational(2);
            const bool hit = std::any_of(rects.begin(), rects.end(), [&](const AxisRect& r) {
                return r.x0 <= cx && cx <= r.x1 && r.y0 <= cy && cy <= r.y1;
            });
            if (hit) total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
        }
    }
    return total;
}

std::int64_t grid_union_cells(std::span<const RankRect> rects, const RankRect& box) {
    std::int64_t count = 0;
    for (std::int64_t x = box.x_lo; x <= box.x_hi; ++x) {
        for (std::int64_t y = box.y_lo; y <= box.y_hi; ++y) {
            for (const RankRect& r : rects) {
                if (r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

bool point_in_any(std::span<const OpenRect> rects, const Point& p) {
    return std::any_of(rects.begin(), rects.end(), [&](const OpenRect& r) {
        return r.x0 < p.x && p.x < r.x1 && r.y0 < p.y && p.y < r.y1;
    });
}

bool open_rects_cover(std::span<const OpenRect> rects, const AxisRect& box) {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (const OpenRect& r : rects) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
        ys.push_back(r.y0);
        ys.push_back(r.y1);
    }
    const auto px = probes(compress(std::move(xs), box.x0, box.x1));
    const auto py = probes(compress(std::move(ys), box.y0, box.y1));
    for (const Rational& x : px) {
        for (const Rational& y : py) {
            if (!point_in_any(rects, Point{x, y})) return false;
        }
    }
    return true;
}

bool strictly_inside(std::span<const Point> ring, const Point& p) {
    bool inside = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

bool placed_inside(const polyplace::OrthoPolygon& p, const polyplace::OrthoPolygon& q,
                   const Rational& lambda, const Point& tau) {
    Rational x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
    for (const Point& v : p.vertices()) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    const Rational cx = (x0 + x1) / Rational(2);
    const Rational cy = (y0 + y1) / Rational(2);
    std::vector<Point> moved;
    for (const Point& v : p.vertices()) {
        moved.push_back({lambda * (v.x - cx) + cx + tau.x, lambda * (v.y - cy) + cy + tau.y});
    }
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (const Point& v : moved) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    for (const Point& v : q.vertices()) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const std::vector<Point> qring(q.vertices().begin(), q.vertices().end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational cxm = (xs[i] + xs[i + 1]) / Rational(2);
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const Point c{cxm, (ys[j] + ys[j + 1]) / Rational(2)};
            if (strictly_inside(moved, c) && !strictly_inside(qring, c)) return false;
        }
    }
    return true;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(lo * den, hi * den);
    return Rational(num_dist(rng), den);
}

AxisRect random_rect(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    std::int64_t x0 = d(rng), x1 = d(rng), y0 = d(rng), y1 = d(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    return {Rational(x0), Rational(x1), Rational(y0), Rational(y1)};
}

bool brute_ov(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    for (const auto& u : a) {
        for (const auto& v : b) {
            bool orthogonal = true;
            for (std::size_t k = 0; k < u.size(); ++k) orthogonal = orthogonal && !(u[k] && v[k]);
            if (orthogonal) return true;
        }
    }
    return false;
}

bool brute_average(const std::vector<std::int64_t>& a) {
    for (std::int64_t x : a) {
        for (std::int64_t y : a) {
            for (std::int64_t z : a) {
                if (x < y && y < z && y - x == z - y) return true;
            }
        }
    }
    return false;
}

bool brute_foursum(const std::vector<std::int64_t>& a1, const std::vector<std::int64_t>& a2,
                   const std::vector<std::int64_t>& b1, const std::vector<std::int64_t>& b2) {
    for (std::int64_t x1 : a1) {
        for (std::int64_t x2 : a2) {
            for (std::int64_t y1 : b1) {
                for (std::int64_t y2 : b2) {
                    if (y2 - y1 == x2 - x1) return true;
                }
            }
        }
    }
    return false;
}

polyplace::TraceProblem random_trace(std::mt19937_64& rng, std::size_t n, std::size_t updates, std::int64_t side,
                                     std::int64_t max_side) {
    polyplace::TraceProblem tp;
    tp.n = n;
    tp.nx = side;
    tp.ny = side;
    std::vector<std::uint64_t> live;
    std::uint64_t next = 1;
    std::uniform_int_distribution<std::int64_t> len(1, max_side);
    const auto rect = [&] {
        const std::int64_t w = std::min(len(rng), side), h = std::min(len(rng), side);
        std::uniform_int_distribution<std::int64_t> x(1, side - w + 1), y(1, side - h + 1);
        const std::int64_t x0 = x(rng), y0 = y(rng);
        return RankRect{x0, x0 + w - 1, y0, y0 + h - 1};
    };
    for (std::size_t i = 0; i < updates; ++i) {
        const bool do_add = live.empty() || (live.size() < n && rng() % 2 == 0);
        if (do_add) {
            tp.updates.push_back({polyplace::UpdateKind::Add, rect(), next, 0});
            live.push_back(next++);
        } else {
            const std::size_t k = rng() % live.size();
            tp.updates.push_back({polyplace::UpdateKind::Delete, {}, live[k], 0});
            live[k] = live.back();
            live.pop_back();
        }
    }
    return tp;
}


}  // namespace oracle
