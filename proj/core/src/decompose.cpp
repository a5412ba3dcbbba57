#include "polyplace/decompose.hpp"

#include <algorithm>
#include <map>

#include "polyplace/errors.hpp"

namespace polyplace {
namespace {

struct HEdge {
    Rational y;
    Rational x_lo;
    Rational x_hi;
};

struct SlabSweep {
    std::vector<Rational> xs;
    std::vector<HEdge> edges;
};

SlabSweep prepare(const OrthoPolygon& poly) {
    SlabSweep s;
    auto verts = poly.vertices();
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = verts[i];
        const Point& b = verts[(i + 1) % n];
        s.xs.push_back(a.x);
        if (a.y == b.y) {
            s.edges.push_back({a.y, min(a.x, b.x), max(a.x, b.x)});
        }
    }
    std::sort(s.xs.begin(), s.xs.end());
    s.xs.erase(std::unique(s.xs.begin(), s.xs.end()), s.xs.end());
    return s;
}

// Interior y-intervals of the polygon within slab [lo, hi] (sorted, disjoint).
std::vector<std::pair<Rational, Rational>> slab_intervals(const SlabSweep& s, const Rational& lo,
                                                          const Rational& hi) {
    std::vector<Rational> ys;
    for (const HEdge& e : s.edges) {
        if (e.x_lo <= lo && hi <= e.x_hi) ys.push_back(e.y);
    }
    std::sort(ys.begin(), ys.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i + 1 < ys.size(); i += 2) {
        out.emplace_back(ys[i], ys[i + 1]);
    }
    return out;
}

// Appends slab rectangles, extending a rectangle from the previous slab when
// its y-extent matches exactly.
class SlabMerger {
public:
    explicit SlabMerger(std::vector<AxisRect>& out) : out_(out) {}

    void slab(const Rational& lo, const Rational& hi,
              const std::vector<std::pair<Rational, Rational>>& intervals) {
        std::map<std::pair<Rational, Rational>, std::size_t> next;
        for (const auto& iv : intervals) {
            auto it = open_.find(iv);
            if (it != open_.end() && out_[it->second].x1 == lo) {
                out_[it->second].x1 = hi;
                next.emplace(iv, it->second);
            } else {
                out_.push_back({lo, hi, iv.first, iv.second});
                next.emplace(iv, out_.size() - 1);
            }
        }
        open_ = std::move(next);
    }

private:
    std::vector<AxisRect>& out_;
    std::map<std::pair<Rational, Rational>, std::size_t> open_;
};

}  // namespace

RectCover cover_interior(const OrthoPolygon& poly) {
    const SlabSweep s = prepare(poly);
    RectCover cover;
    cover.source = CoverSource::Interior;
    SlabMerger merger(cover.rects);
    for (std::size_t k = 0; k + 1 < s.xs.size(); ++k) {
        merger.slab(s.xs[k], s.xs[k + 1], slab_intervals(s, s.xs[k], s.xs[k + 1]));
    }
    return cover;
}

RectCover cover_complement(const OrthoPolygon& poly, const AxisRect& frame) {
    const AxisRect b = bbox(poly);
    if (!(frame.x0 < b.x0 && b.x1 < frame.x1 && frame.y0 < b.y0 && b.y1 < frame.y1)) {
        throw Error("FrameTooSmall", "complement frame must strictly contain the polygon's bounding box");
    }
    RectCover cover;
    cover.source = CoverSource::Complement;
    cover.frame = frame;
    cover.rects.push_back({frame.x0, b.x0, frame.y0, frame.y1});  // left
    cover.rects.push_back({b.x1, frame.x1, frame.y0, frame.y1});  // right
    cover.rects.push_back({b.x0, b.x1, frame.y0, b.y0});          // bottom
    cover.rects.push_back({b.x0, b.x1, b.y1, frame.y1});          // top

    const SlabSweep s = prepare(poly);
    SlabMerger merger(cover.rects);
    for (std::size_t k = 0; k + 1 < s.xs.size(); ++k) {
        const auto inside = slab_intervals(s, s.xs[k], s.xs[k + 1]);
        std::vector<std::pair<Rational, Rational>> gaps;
        Rational cursor = b.y0;
        for (const auto& iv : inside) {
            if (cursor < iv.first) gaps.emplace_back(cursor, iv.first);
            cursor = iv.second;
        }
        if (cursor < b.y1) gaps.emplace_back(cursor, b.y1);
        merger.slab(s.xs[k], s.xs[k + 1], gaps);
    }
    return cover;
}

AxisRect inflate(const AxisRect& box, const Rational& by) {
    return {box.x0 - by, box.x1 + by, box.y0 - by, box.y1 + by};
}

Rational frame_margin(const AxisRect& p_box, const Rational& lambda_cap) {
    return (lambda_cap + Rational(1)) * (p_box.width() + p_box.height()) + Rational(1);
}

}  // namespace polyplace
