#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polyplace/rational.hpp"

namespace polyplace {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

// Axis-aligned rectangle [x0,x1] x [y0,y1]; closed unless an operation says otherwise.
struct AxisRect {
    Rational x0;
    Rational x1;
    Rational y0;
    Rational y1;

    [[nodiscard]] Rational width() const { return x1 - x0; }
    [[nodiscard]] Rational height() const { return y1 - y0; }
    [[nodiscard]] Rational area() const { return width() * height(); }
    [[nodiscard]] Point center() const { return {midpoint(x0, x1), midpoint(y0, y1)}; }
    [[nodiscard]] bool contains(const Point& p) const {
        return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
    }
    [[nodiscard]] bool contains(const AxisRect& r) const {
        return x0 <= r.x0 && r.x1 <= x1 && y0 <= r.y0 && r.y1 <= y1;
    }

    friend bool operator==(const AxisRect&, const AxisRect&) = default;
};

// Scale factor and translation. The scale is applied about the polygon's
// bounding-box center, then the translation.
struct Placement {
    Rational lambda{1};
    Point tau{};
};

// Simple rectilinear polygon, counter-clockwise, no flat vertices.
// Only obtainable through validate_polygon or the transforms below, so every
// instance satisfies the invariants.
class OrthoPolygon {
public:
    [[nodiscard]] std::span<const Point> vertices() const { return vertices_; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] const Point& operator[](std::size_t i) const { return vertices_[i]; }
    // Number of collinear (flat) input vertices dropped during validation.
    [[nodiscard]] std::size_t merged_vertices() const { return merged_; }

    friend bool operator==(const OrthoPolygon& a, const OrthoPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    friend OrthoPolygon validate_polygon(std::span<const Point> vertices);
    friend OrthoPolygon map_vertices_affine(const OrthoPolygon& poly, const Rational& scale,
                                            const Point& offset);

    std::vector<Point> vertices_;
    std::size_t merged_ = 0;
};

// Throws Error with kind NonRectilinear, SelfIntersecting, DegenerateEdge,
// TooFewVertices or EmptyPolygon. Either orientation is accepted; the result
// is counter-clockwise.
OrthoPolygon validate_polygon(std::span<const Point> vertices);

// v -> scale * v + offset with scale > 0. Preserves all polygon invariants.
OrthoPolygon map_vertices_affine(const OrthoPolygon& poly, const Rational& scale, const Point& offset);

AxisRect bbox(const OrthoPolygon& poly);

struct Centered {
    OrthoPolygon polygon;
    Point offset;  // original = polygon + offset
};
Centered normalize_center(const OrthoPolygon& poly);

// v -> lambda * (v - c) + c + tau, c = bbox center. Throws NonPositiveScale.
OrthoPolygon transform(const OrthoPolygon& poly, const Placement& placement);

Rational signed_area(std::span<const Point> vertices);
Rational polygon_area(const OrthoPolygon& poly);

// Closed point-in-polygon test (boundary counts as inside).
bool contains_point(const OrthoPolygon& poly, const Point& p);

}  // namespace polyplace
