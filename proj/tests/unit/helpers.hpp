#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "polyplace/geometry.hpp"

namespace test {

using polyplace::Point;
using polyplace::Rational;

inline std::vector<Point> pts(std::initializer_list<std::pair<Rational, Rational>> xy) {
    std::vector<Point> out;
    for (const auto& [x, y] : xy) out.push_back({x, y});
    return out;
}

inline polyplace::OrthoPolygon poly(std::initializer_list<std::pair<Rational, Rational>> xy) {
    const auto v = pts(xy);
    return polyplace::validate_polygon(v);
}

inline polyplace::OrthoPolygon rect_poly(const Rational& x0, const Rational& y0, const Rational& x1,
                                         const Rational& y1) {
    return poly({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace test
