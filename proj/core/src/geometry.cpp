#include "polyplace/geometry.hpp"

#include <algorithm>
#include <string>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

enum class Dir { Horizontal, Vertical };

Dir edge_dir(const Point& a, const Point& b) { return a.y == b.y ? Dir::Horizontal : Dir::Vertical; }

// Sign of the edge direction along its axis.
int edge_sense(const Point& a, const Point& b) {
    return a.y == b.y ? (b.x > a.x ? 1 : -1) : (b.y > a.y ? 1 : -1);
}

std::string fmt_point(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

bool segments_touch(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
    const Rational& ax_lo = min(a0.x, a1.x);
    const Rational& ax_hi = max(a0.x, a1.x);
    const Rational& ay_lo = min(a0.y, a1.y);
    const Rational& ay_hi = max(a0.y, a1.y);
    const Rational& bx_lo = min(b0.x, b1.x);
    const Rational& bx_hi = max(b0.x, b1.x);
    const Rational& by_lo = min(b0.y, b1.y);
    const Rational& by_hi = max(b0.y, b1.y);
    return ax_lo <= bx_hi && bx_lo <= ax_hi && ay_lo <= by_hi && by_lo <= ay_hi;
}

}  // namespace

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

OrthoPolygon validate_polygon(std::span<const Point> input) {
    const std::size_t n = input.size();
    if (n == 0) {
        throw Error("TooFewVertices", "polygon has no vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = input[i];
        const Point& b = input[(i + 1) % n];
        if (a == b) {
            throw Error("DegenerateEdge", "zero-length edge at vertex " + std::to_string(i) + " " + fmt_point(a));
        }
        if (a.x != b.x && a.y != b.y) {
            throw Error("NonRectilinear",
                        "edge " + fmt_point(a) + " -> " + fmt_point(b) + " is not axis-parallel");
        }
    }
    if (n < 4) {
        throw Error("TooFewVertices", "polygon needs at least 4 vertices, got " + std::to_string(n));
    }

    // Drop flat vertices; a reversal along one axis is a zero-width spike.
    std::vector<Point> verts(input.begin(), input.end());
    std::size_t merged = 0;
    bool changed = true;
    while (changed && verts.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < verts.size() && verts.size() >= 3; ++i) {
            const std::size_t m = verts.size();
            const Point& prev = verts[(i + m - 1) % m];
            const Point& cur = verts[i];
            const Point& next = verts[(i + 1) % m];
            if (edge_dir(prev, cur) != edge_dir(cur, next)) continue;
            if (edge_sense(prev, cur) != edge_sense(cur, next)) {
                throw Error("SelfIntersecting", "polygon doubles back on itself at " + fmt_point(cur));
            }
            verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
            ++merged;
            changed = true;
            --i;
        }
    }
    if (verts.size() < 4) {
        throw Error("TooFewVertices",
                    "polygon has fewer than 4 vertices after merging flat vertices");
    }

    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // adjacent through the wrap-around
            if (segments_touch(verts[i], verts[(i + 1) % m], verts[j], verts[(j + 1) % m])) {
                throw Error("SelfIntersecting", "edges starting at " + fmt_point(verts[i]) + " and " +
                                                    fmt_point(verts[j]) + " intersect");
            }
        }
    }

    const Rational area = signed_area(verts);
    if (area.sign() == 0) {
        throw Error("SelfIntersecting", "polygon has zero signed area");
    }
    if (area.sign() < 0) {
        std::reverse(verts.begin(), verts.end());
    }

    OrthoPolygon poly;
    poly.vertices_ = std::move(verts);
    poly.merged_ = merged;
    return poly;
}

OrthoPolygon map_vertices_affine(const OrthoPolygon& poly, const Rational& scale, const Point& offset) {
    if (scale.sign() <= 0) {
        throw Error("NonPositiveScale", "scale factor must be positive, got " + scale.to_string());
    }
    OrthoPolygon out;
    out.vertices_.reserve(poly.size());
    for (const Point& v : poly.vertices()) {
        out.vertices_.push_back(scale * v + offset);
    }
    out.merged_ = poly.merged_;
    return out;
}

AxisRect bbox(const OrthoPolygon& poly) {
    auto verts = poly.vertices();
    AxisRect box{verts[0].x, verts[0].x, verts[0].y, verts[0].y};
    for (const Point& v : verts) {
        if (v.x < box.x0) box.x0 = v.x;
        if (v.x > box.x1) box.x1 = v.x;
        if (v.y < box.y0) box.y0 = v.y;
        if (v.y > box.y1) box.y1 = v.y;
    }
    return box;
}

Centered normalize_center(const OrthoPolygon& poly) {
    const Point c = bbox(poly).center();
    return {map_vertices_affine(poly, Rational(1), Point{-c.x, -c.y}), c};
}

OrthoPolygon transform(const OrthoPolygon& poly, const Placement& placement) {
    if (placement.lambda.sign() <= 0) {
        throw Error("NonPositiveScale", "scale factor must be positive, got " + placement.lambda.to_string());
    }
    const Point c = bbox(poly).center();
    // lambda * (v - c) + c + tau = lambda * v + ((1 - lambda) * c + tau)
    const Point offset = (Rational(1) - placement.lambda) * c + placement.tau;
    return map_vertices_affine(poly, placement.lambda, offset);
}

Rational signed_area(std::span<const Point> vertices) {
    Rational twice;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / Rational(2);
}

Rational polygon_area(const OrthoPolygon& poly) { return signed_area(poly.vertices()); }

bool contains_point(const OrthoPolygon& poly, const Point& p) {
    auto verts = poly.vertices();
    const std::size_t n = verts.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = verts[i];
        const Point& b = verts[(i + 1) % n];
        if (segments_touch(a, b, p, p)) return true;
        if (a.x == b.x) {
            const Rational& lo = min(a.y, b.y);
            const Rational& hi = max(a.y, b.y);
            if (a.x > p.x && lo <= p.y && p.y < hi) inside = !inside;
        }
    }
    return inside;
}

}  // namespace polyplace
