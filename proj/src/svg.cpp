#include "screening/svg.hpp"

#include <cstdio>

#include "screening/format.hpp"

namespace screening {

namespace {

constexpr double kLeft = 60.0;
constexpr double kRight = 580.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 420.0;

std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

double map_x(double phi) { return kLeft + phi * (kRight - kLeft); }
double map_y(double rho) { return kBottom - rho * (kBottom - kTop); }

void add_line(std::string& svg, double x1, double y1, double x2, double y2,
              const char* style) {
    svg += "  <line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
           "\" y2=\"" + coord(y2) + "\" " + style + "/>\n";
}

void add_text(std::string& svg, double x, double y, const char* attributes,
              const std::string& body) {
    svg += "  <text x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" " + attributes + ">" +
           body + "</text>\n";
}

} // namespace

std::string render_svg(const CurveSamples& samples) {
    if (samples.rows.size() < 2) {
        throw ValidationError("svg rendering needs at least 2 curve samples");
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\" font-family=\"sans-serif\" font-size=\"13\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double value = i / 5.0;
        const double x = map_x(value);
        const double y = map_y(value);
        add_line(svg, x, kBottom, x, kBottom + 6.0, "stroke=\"#333333\" stroke-width=\"1\"");
        add_text(svg, x, kBottom + 22.0, "text-anchor=\"middle\" fill=\"#333333\"",
                 format_sig6(value));
        add_line(svg, kLeft - 6.0, y, kLeft, y, "stroke=\"#333333\" stroke-width=\"1\"");
        add_text(svg, kLeft - 10.0, y + 4.0, "text-anchor=\"end\" fill=\"#333333\"",
                 format_sig6(value));
    }
    add_line(svg, kLeft, kBottom, kRight, kBottom, "stroke=\"#333333\" stroke-width=\"1.5\"");
    add_line(svg, kLeft, kTop, kLeft, kBottom, "stroke=\"#333333\" stroke-width=\"1.5\"");
    add_text(svg, 0.5 * (kLeft + kRight), 462.0, "text-anchor=\"middle\" fill=\"#333333\"",
             "φ");
    svg += "  <text x=\"20.00\" y=\"240.00\" text-anchor=\"middle\" fill=\"#333333\" "
           "transform=\"rotate(-90 20 240)\">ρ(φ)</text>\n";

    if (samples.threshold) {
        const double x = map_x(*samples.threshold);
        add_line(svg, x, kTop, x, kBottom,
                 "stroke=\"#cc2222\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
        add_text(svg, x + 6.0, kTop + 16.0, "fill=\"#cc2222\"",
                 "φe = " + format_sig6(*samples.threshold));
    }

    std::string path = "  <path d=\"M " + coord(map_x(samples.rows[0].phi)) + "," +
                       coord(map_y(samples.rows[0].ppv));
    for (std::size_t i = 1; i < samples.rows.size(); ++i) {
        path += " L " + coord(map_x(samples.rows[i].phi)) + "," +
                coord(map_y(samples.rows[i].ppv));
    }
    path += "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>\n";
    svg += path;

    if (samples.threshold && samples.ppv_at_threshold) {
        svg += "  <circle cx=\"" + coord(map_x(*samples.threshold)) + "\" cy=\"" +
               coord(map_y(*samples.ppv_at_threshold)) + "\" r=\"3.5\" fill=\"#cc2222\"/>\n";
    }

    if (!samples.name.empty()) {
        add_text(svg, kLeft, 28.0, "fill=\"#111111\" font-size=\"15\"",
                 xml_escape(samples.name));
    }
    add_text(svg, kLeft, 48.0, "fill=\"#111111\"", "ε = " + format_sig6(samples.epsilon));

    svg += "</svg>\n";
    return svg;
}

} // namespace screening
