#include "rect/render.hpp"

namespace rect {

namespace {

void line(std::string& out, int x1, int y1, int x2, int y2, const char* stroke, int width) {
    out += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
           "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + std::to_string(width) + "\"/>\n";
}

}  // namespace

std::string render_svg(const Rectangulation& r, const RenderOptions& opts) {
    const int side = r.config.side();
    const int s = opts.scale;
    const int margin = s / 2;
    const int size = 2 * margin + side * s;
    auto px = [&](int x) { return margin + x * s; };
    auto py = [&](int y) { return margin + (side - y) * s; };  // y up

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
           "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " +
           std::to_string(size) + " " + std::to_string(size) + "\">\n";
    out += "  <rect x=\"" + std::to_string(px(0)) + "\" y=\"" + std::to_string(py(side)) +
           "\" width=\"" + std::to_string(side * s) + "\" height=\"" +
           std::to_string(side * s) + "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int a = 1; a <= r.n(); ++a) {
        const Segment& seg = r.seg(a);
        const Extent e = extent_of(r.config, seg);
        if (seg.orientation == Orientation::H) {
            line(out, px(e.lo), py(e.cross), px(e.hi), py(e.cross), "black", 2);
        } else {
            line(out, px(e.cross), py(e.lo), px(e.cross), py(e.hi), "black", 2);
        }
    }
    for (int a = 1; a <= r.n(); ++a) {
        const int cx = px(r.config.x_of(a));
        const int cy = py(r.config.y_of(a));
        out += "  <circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) +
               "\" r=\"" + std::to_string(s / 8 > 2 ? s / 8 : 2) + "\" fill=\"black\"/>\n";
        if (opts.labels) {
            out += "  <text x=\"" + std::to_string(cx + s / 6) + "\" y=\"" +
                   std::to_string(cy - s / 6) + "\" font-family=\"sans-serif\" font-size=\"" +
                   std::to_string(s / 3 > 8 ? s / 3 : 8) + "\">p" + std::to_string(a) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace rect
