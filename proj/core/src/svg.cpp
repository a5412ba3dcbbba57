#include "polyplace/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace polyplace {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct View {
    double x0, y1, scale, margin;
    [[nodiscard]] double px(const Rational& x) const { return margin + (x.to_double() - x0) * scale; }
    [[nodiscard]] double py(const Rational& y) const { return margin + (y1 - y.to_double()) * scale; }
};

std::string path_of(const OrthoPolygon& poly, const View& v) {
    std::string d;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d += (i == 0 ? "M" : " L");
        d += num(v.px(poly[i].x)) + "," + num(v.py(poly[i].y));
    }
    return d + " Z";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    AxisRect box = bbox(scene.container);
    if (scene.placed) {
        const AxisRect pb = bbox(*scene.placed);
        box = {min(box.x0, pb.x0), max(box.x1, pb.x1), min(box.y0, pb.y0), max(box.y1, pb.y1)};
    }
    const double w = std::max(box.width().to_double(), 1e-12);
    const double h = std::max(box.height().to_double(), 1e-12);
    const double margin = 20;
    const double scale = (scene.width_px - 2 * margin) / std::max(w, h);
    const double legend_h = 18.0 * static_cast<double>(scene.legend.size());
    const View view{box.x0.to_double(), box.y1.to_double(), scale, margin};
    const double height_px = h * scale + 2 * margin + legend_h;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(scene.width_px) << "\" height=\""
        << num(height_px) << "\" viewBox=\"0 0 " << num(scene.width_px) << " " << num(height_px) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<path d=\"" << path_of(scene.container, view)
        << "\" fill=\"#dde6f0\" stroke=\"#1f3b5c\" stroke-width=\"1\" fill-rule=\"evenodd\"/>\n";
    if (scene.placed) {
        out << "<path d=\"" << path_of(*scene.placed, view)
            << "\" fill=\"#e8743b\" fill-opacity=\"0.6\" stroke=\"#8a3a12\" stroke-width=\"1\"/>\n";
    }
    double y = h * scale + 2 * margin + 12;
    for (const std::string& line : scene.legend) {
        out << "<text x=\"" << num(margin) << "\" y=\"" << num(y)
            << "\" font-family=\"monospace\" font-size=\"13\">" << escape(line) << "</text>\n";
        y += 18;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polyplace
