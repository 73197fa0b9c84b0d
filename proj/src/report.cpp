#include "rispls/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rispls/version.hpp"

namespace rispls::report {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

std::string format_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string format_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}

std::string format_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string emit_csv(const std::string& axis_name, const std::vector<ResultRow>& rows,
                     std::uint64_t seed, std::int64_t trials) {
    if (rows.empty()) throw std::runtime_error("emit_csv: no result rows");
    std::string out = "# rispls ";
    out += kVersion;
    out += " seed=" + std::to_string(seed) + " trials=" + std::to_string(trials) + "\n";
    out += "series," + axis_name +
           ",rate_mean,rate_ci_low,rate_ci_high,outage_mean,outage_ci_low,"
           "outage_ci_high,trials,seed\n";
    for (const ResultRow& r : rows) {
        out += r.series + "," + format_sig9(r.axis_value) + "," +
               format_sig9(r.rate.mean) + "," + format_sig9(r.rate.ci_low) + "," +
               format_sig9(r.rate.ci_high) + "," + format_sig9(r.outage.mean) + "," +
               format_sig9(r.outage.ci_low) + "," + format_sig9(r.outage.ci_high) +
               "," + std::to_string(r.trials) + "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

std::string emit_svg(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, const std::string& title) {
    if (series.empty()) throw std::runtime_error("svg needs at least one series");
    for (const Series& s : series) {
        if (s.x.size() != s.y.size())
            throw std::runtime_error("svg series '" + s.label +
                                     "' has mismatched x/y lengths");
        if (s.x.size() < 2)
            throw std::runtime_error("svg needs at least two points per series; '" +
                                     s.label + "' has " + std::to_string(s.x.size()));
    }

    double x_min = series[0].x.front(), x_max = x_min;
    double y_min = series[0].y.front(), y_max = y_min;
    for (const Series& s : series) {
        for (double v : s.x) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }
        for (double v : s.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    // Fixed canvas: plot area on the left, legend column on the right.
    const double width = 880.0, height = 520.0;
    const double left = 70.0, right = 690.0, top = 44.0, bottom = 464.0;
    const auto px = [&](double x) {
        return left + (x - x_min) / (x_max - x_min) * (right - left);
    };
    const auto py = [&](double y) {
        return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << (left + right) / 2.0
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << xml_escape(title) << "</text>\n";

    // Grid and tick labels, five divisions per axis.
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 5.0;
        const double fy = y_min + (y_max - y_min) * i / 5.0;
        const std::string gx = format_coord(px(fx));
        const std::string gy = format_coord(py(fy));
        svg << "<line x1=\"" << gx << "\" y1=\"" << top << "\" x2=\"" << gx
            << "\" y2=\"" << bottom << "\" stroke=\"#dddddd\"/>\n";
        svg << "<line x1=\"" << left << "\" y1=\"" << gy << "\" x2=\"" << right
            << "\" y2=\"" << gy << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << gx << "\" y=\"" << bottom + 18.0
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << format_tick(fx) << "</text>\n";
        svg << "<text x=\"" << left - 8.0 << "\" y=\"" << format_coord(py(fy) + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_tick(fy) << "</text>\n";
    }
    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
        << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    svg << "<text x=\"" << (left + right) / 2.0 << "\" y=\"" << height - 14.0
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << (top + bottom) / 2.0
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << (top + bottom) / 2.0 << ")\">" << xml_escape(y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series[k].x.size(); ++i) {
            if (i) svg << " ";
            svg << format_coord(px(series[k].x[i])) << ","
                << format_coord(py(series[k].y[i]));
        }
        svg << "\"/>\n";
    }

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        const double ly = top + 14.0 + 20.0 * static_cast<double>(k);
        svg << "<line x1=\"" << right + 12.0 << "\" y1=\"" << ly << "\" x2=\""
            << right + 40.0 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << right + 46.0 << "\" y=\"" << ly + 4.0
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << xml_escape(series[k].label) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}
