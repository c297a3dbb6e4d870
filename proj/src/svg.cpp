#include "fanplan/svg.hpp"

#include <cstdio>
#include <sstream>

namespace fanplan {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

std::string render_svg(const Drawing&, const LayoutResult& l) {
    const double s = 400.0, margin = 24.0;
    double width = 2 * margin, height = 2 * margin;
    for (const auto& [eid, poly] : l.polylines) {
        (void)eid;
        for (const Vec2& v : poly) {
            width = std::max(width, v.x * s + 2 * margin);
            height = std::max(height, v.y * s + 2 * margin);
        }
    }
    for (const auto& [id, v] : l.vertex_pos) {
        (void)id;
        width = std::max(width, v.x * s + 2 * margin);
        height = std::max(height, v.y * s + 2 * margin);
    }
    auto px = [&](Vec2 v) { return Vec2{margin + v.x * s, height - (margin + v.y * s)}; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
       << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height)
       << "\">\n";
    for (const auto& [eid, poly] : l.polylines) {
        os << "  <path id=\"edge-" << eid << "\" fill=\"none\" stroke=\"#1f3552\" stroke-width=\"1.5\" d=\"";
        for (size_t i = 0; i < poly.size(); ++i) {
            Vec2 v = px(poly[i]);
            os << (i == 0 ? "M" : " L") << num(v.x) << " " << num(v.y);
        }
        os << "\"/>\n";
    }
    for (const auto& [vid, pos] : l.vertex_pos) {
        Vec2 v = px(pos);
        os << "  <circle cx=\"" << num(v.x) << "\" cy=\"" << num(v.y)
           << "\" r=\"4\" fill=\"#c23b22\"/>\n";
        os << "  <text x=\"" << num(v.x + 6) << "\" y=\"" << num(v.y - 6)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << vid << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace fanplan
