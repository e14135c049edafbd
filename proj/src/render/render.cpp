#include "portraits/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace portraits {

namespace {

constexpr std::array<const char*, 8> palette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

struct Canvas {
    double cx;
    double cy;
    double radius;

    double x(const Angle& a, double r) const { return cx + r * std::cos(2.0 * std::numbers::pi * a.to_double()); }
    // SVG's y axis points down.
    double y(const Angle& a, double r) const { return cy - r * std::sin(2.0 * std::numbers::pi * a.to_double()); }
    std::string point(const Angle& a, double r) const { return num(x(a, r)) + "," + num(y(a, r)); }
};

std::string shape(const Canvas& cv, const AngleSet& s, const std::string& attrs) {
    if (s.size() == 1) {
        return "";
    }
    if (s.size() == 2) {
        return "<line x1=\"" + num(cv.x(s[0], cv.radius)) + "\" y1=\"" + num(cv.y(s[0], cv.radius)) + "\" x2=\"" +
               num(cv.x(s[1], cv.radius)) + "\" y2=\"" + num(cv.y(s[1], cv.radius)) + "\" " + attrs + "/>\n";
    }
    std::string pts;
    for (std::size_t i = 0; i < s.size(); ++i) {
        pts += (i ? " " : "") + cv.point(s[i], cv.radius);
    }
    return "<polygon points=\"" + pts + "\" " + attrs + "/>\n";
}

} // namespace

std::string portrait_svg(const OrbitPortrait& portrait, const RenderOptions& opts) {
    if (opts.size_px < 64) {
        throw std::invalid_argument("size_px must be at least 64");
    }
    const double size = opts.size_px;
    const Canvas cv{size / 2, size / 2, 0.4 * size};
    const std::string sz = std::to_string(opts.size_px);
    const int d = portrait.degree();

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + sz + "\" height=\"" + sz +
           "\" viewBox=\"0 0 " + sz + " " + sz + "\">\n";
    svg += "<title>" + format_portrait(portrait) + " (d=" + std::to_string(d) + ")</title>\n";
    svg += "<rect width=\"" + sz + "\" height=\"" + sz + "\" fill=\"#ffffff\"/>\n";
    svg += "<circle cx=\"" + num(cv.cx) + "\" cy=\"" + num(cv.cy) + "\" r=\"" + num(cv.radius) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    if (opts.show_translates) {
        svg += "<g class=\"translates\" fill=\"none\" stroke-width=\"1\" stroke-dasharray=\"4,3\" opacity=\"0.45\">\n";
        for (std::size_t j = 0; j < portrait.period(); ++j) {
            const std::string color = palette[j % palette.size()];
            for (int k = 1; k < d; ++k) {
                svg += shape(cv, portrait.set(j).rotated(Angle(k, d)), "stroke=\"" + color + "\"");
            }
        }
        svg += "</g>\n";
    }

    svg += "<g class=\"sets\" stroke-width=\"2\">\n";
    for (std::size_t j = 0; j < portrait.period(); ++j) {
        const std::string color = palette[j % palette.size()];
        svg += shape(cv, portrait.set(j), "stroke=\"" + color + "\" fill=\"" + color + "\" fill-opacity=\"0.15\"");
    }
    svg += "</g>\n";

    svg += "<g class=\"angles\">\n";
    for (std::size_t j = 0; j < portrait.period(); ++j) {
        for (const Angle& a : portrait.set(j)) {
            svg += "<circle cx=\"" + num(cv.x(a, cv.radius)) + "\" cy=\"" + num(cv.y(a, cv.radius)) +
                   "\" r=\"3\" fill=\"" + palette[j % palette.size()] + "\"/>\n";
        }
    }
    svg += "</g>\n";

    if (opts.highlight_characteristic && !portrait.is_trivial()) {
        CharacteristicArc ch = characteristic_arc(portrait);
        const double r = cv.radius + 6;
        const bool large = ch.arc.length() > Rational(1, 2);
        // Counter-clockwise on screen is sweep-flag 0 once y is flipped.
        svg += "<path class=\"characteristic\" d=\"M " + cv.point(ch.arc.start(), r) + " A " + num(r) + " " + num(r) +
               " 0 " + (large ? "1" : "0") + " 0 " + cv.point(ch.arc.end(), r) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\"/>\n";
    }

    if (opts.label_angles) {
        svg += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
        for (const Angle& a : portrait.all_angles()) {
            svg += "<text x=\"" + num(cv.x(a, cv.radius + 16)) + "\" y=\"" + num(cv.y(a, cv.radius + 16) + 3) + "\">" +
                   a.str() + "</text>\n";
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace portraits
