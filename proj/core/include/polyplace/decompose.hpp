#pragma once

#include <optional>
#include <vector>

#include "polyplace/geometry.hpp"

namespace polyplace {

enum class CoverSource { Interior, Complement };

// Rectangles covering a polygon (interior) or the part of a finite frame
// outside it (complement). Interior rectangles have pairwise disjoint
// interiors; complement rectangles may overlap.
struct RectCover {
    std::vector<AxisRect> rects;
    CoverSource source = CoverSource::Interior;
    std::optional<AxisRect> frame;       // complement covers only
    std::optional<Rational> inflation;   // how far the frame extends past bbox, when known
};

// Vertical-slab decomposition, merged across slabs where y-extents match.
RectCover cover_interior(const OrthoPolygon& poly);

// Four bands covering frame minus bbox(poly), then a slab cover of bbox(poly)
// minus poly. Throws FrameTooSmall unless frame strictly contains bbox(poly).
RectCover cover_complement(const OrthoPolygon& poly, const AxisRect& frame);

AxisRect inflate(const AxisRect& box, const Rational& by);

// Margin that makes a finite frame around bbox(Q) indistinguishable from the
// whole plane for every scale up to lambda_cap and translation inside bbox(Q):
// (lambda_cap + 1) * (width + height of bbox(P)) + 1.
Rational frame_margin(const AxisRect& p_box, const Rational& lambda_cap);

}  // namespace polyplace
