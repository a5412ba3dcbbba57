#include "polyplace/instances.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

using Grid = std::vector<std::vector<char>>;

bool filled(const Grid& g, std::int64_t x, std::int64_t y) {
    const auto n = static_cast<std::int64_t>(g.size());
    return x >= 0 && y >= 0 && x < n && y < n && g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

// No 2x2 window holds exactly two diagonal cells, so the boundary never
// touches itself at a corner.
bool pinch_free(const Grid& g) {
    const auto n = static_cast<std::int64_t>(g.size());
    for (std::int64_t x = -1; x < n; ++x) {
        for (std::int64_t y = -1; y < n; ++y) {
            const bool a = filled(g, x, y), b = filled(g, x + 1, y), c = filled(g, x, y + 1),
                       d = filled(g, x + 1, y + 1);
            if (a == d && b == c && a != b) return false;
        }
    }
    return true;
}

// Every empty cell reaches the outside of the grid.
bool hole_free(const Grid& g) {
    const auto n = static_cast<std::int64_t>(g.size());
    const std::int64_t m = n + 2;
    std::vector<char> seen(static_cast<std::size_t>(m * m), 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> stack{{-1, -1}};
    seen[0] = 1;
    std::int64_t reached = 0;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++reached;
        const std::int64_t dx[] = {1, -1, 0, 0};
        const std::int64_t dy[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const std::int64_t nx = x + dx[k], ny = y + dy[k];
            if (nx < -1 || ny < -1 || nx > n || ny > n || filled(g, nx, ny)) continue;
            auto& s = seen[static_cast<std::size_t>((nx + 1) * m + (ny + 1))];
            if (s) continue;
            s = 1;
            stack.emplace_back(nx, ny);
        }
    }
    std::int64_t cells = 0;
    for (const auto& col : g) cells += std::count(col.begin(), col.end(), 1);
    return reached + cells == m * m;
}

// Counter-clockwise corner sequence of the cell set's boundary in grid units.
std::vector<std::pair<std::int64_t, std::int64_t>> trace(const Grid& g) {
    using P = std::pair<std::int64_t, std::int64_t>;
    std::map<P, P> next;
    const auto n = static_cast<std::int64_t>(g.size());
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
            if (!filled(g, x, y)) continue;
            if (!filled(g, x, y - 1)) next[{x, y}] = {x + 1, y};
            if (!filled(g, x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
            if (!filled(g, x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
            if (!filled(g, x - 1, y)) next[{x, y + 1}] = {x, y};
        }
    }
    std::vector<P> ring;
    const P start = next.begin()->first;
    P cur = start;
    do {
        ring.push_back(cur);
        cur = next.at(cur);
    } while (cur != start);
    std::vector<P> corners;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const P& a = ring[(i + ring.size() - 1) % ring.size()];
        const P& b = ring[i];
        const P& c = ring[(i + 1) % ring.size()];
        const bool straight = (a.first == b.first && b.first == c.first) || (a.second == b.second && b.second == c.second);
        if (!straight) corners.push_back(b);
    }
    return corners;
}

std::vector<std::int64_t> random_levels(std::mt19937_64& rng, std::size_t count, std::int64_t lo, std::int64_t hi) {
    if (hi - lo + 1 < static_cast<std::int64_t>(count)) throw Error("InvalidArgument", "coordinate range too small");
    std::vector<std::int64_t> all;
    for (std::int64_t v = lo; v <= hi; ++v) all.push_back(v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

OrthoPolygon random_orthogonal_polygon(std::mt19937_64& rng, const RandomPolygonParams& params) {
    if (params.max_vertices < 4 || params.grid == 0) throw Error("InvalidArgument", "need at least 4 vertices");
    const std::size_t n = params.grid;
    Grid g(n, std::vector<char>(n, 0));
    std::uniform_int_distribution<std::size_t> cell(0, n - 1);
    g[cell(rng)][cell(rng)] = 1;
    std::uniform_int_distribution<std::size_t> target_dist(1, n * n);
    const std::size_t target = target_dist(rng);
    std::size_t size = 1;
    for (std::size_t attempt = 0; size < target && attempt < 20 * n * n; ++attempt) {
        const auto x = static_cast<std::int64_t>(cell(rng));
        const auto y = static_cast<std::int64_t>(cell(rng));
        if (filled(g, x, y)) continue;
        if (!filled(g, x - 1, y) && !filled(g, x + 1, y) && !filled(g, x, y - 1) && !filled(g, x, y + 1)) continue;
        g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
        if (!pinch_free(g) || !hole_free(g) || trace(g).size() > params.max_vertices) {
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 0;
            continue;
        }
        ++size;
    }
    const auto xs = random_levels(rng, n + 1, params.lo, params.hi);
    const auto ys = random_levels(rng, n + 1, params.lo, params.hi);
    std::vector<Point> verts;
    for (const auto& [gx, gy] : trace(g)) {
        verts.push_back({Rational(xs[static_cast<std::size_t>(gx)]), Rational(ys[static_cast<std::size_t>(gy)])});
    }
    return validate_polygon(verts);
}

OrthoPolygon staircase_corridor(std::mt19937_64& rng, std::size_t steps, std::int64_t thickness,
                                std::int64_t max_run) {
    if (steps == 0 || thickness < 2 || max_run < 1) {
        throw Error("InvalidArgument", "staircase needs a step, thickness >= 2 and max_run >= 1");
    }
    // rises stay below the thickness so the two chains never touch
    std::uniform_int_distribution<std::int64_t> run(1, max_run);
    std::uniform_int_distribution<std::int64_t> rise(1, thickness - 1);
    std::vector<std::int64_t> xs{0};
    std::vector<std::int64_t> ys{0};
    for (std::size_t i = 0; i < steps; ++i) {
        xs.push_back(xs.back() + run(rng));
        ys.push_back(ys.back() + rise(rng));
    }
    // lower chain (x_i, y_i) -> (x_{i+1}, y_i) -> ..., upper chain shifted by thickness
    std::vector<Point> v;
    for (std::size_t i = 0; i < steps; ++i) {
        v.push_back({Rational(xs[i]), Rational(ys[i])});
        v.push_back({Rational(xs[i + 1]), Rational(ys[i])});
    }
    for (std::size_t i = steps; i-- > 0;) {
        v.push_back({Rational(xs[i + 1]), Rational(ys[i] + thickness)});
        v.push_back({Rational(xs[i]), Rational(ys[i] + thickness)});
    }
    return validate_polygon(v);
}

}  // namespace polyplace
