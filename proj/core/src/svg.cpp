#include "riot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace riot {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string svgLineChart(const std::vector<SvgSeries>& series, const std::string& title,
                         const std::string& xLabel, const std::string& yLabel, int width,
                         int height) {
    const double ml = 60, mr = 20, mt = 40, mb = 45;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::max(), xmax = std::numeric_limits<double>::lowest();
    double ymin = 0, ymax = std::numeric_limits<double>::lowest();
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            any = true;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!any) {
        xmin = 0;
        xmax = 1;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2.0) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(title) + "</text>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt + ph) + "\" x2=\"" + num(ml + pw) +
           "\" y2=\"" + num(mt + ph) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
           num(mt + ph) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(mt + ph + 16) +
               "\" text-anchor=\"middle\" font-size=\"10\">" + num(fx) + "</text>\n";
        svg += "<text x=\"" + num(ml - 6) + "\" y=\"" + num(py(fy) + 3) +
               "\" text-anchor=\"end\" font-size=\"10\">" + num(fy) + "</text>\n";
    }
    svg += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(height - 8.0) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + escape(xLabel) + "</text>\n";
    svg += "<text x=\"14\" y=\"" + num(mt + ph / 2) +
           "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 14 " +
           num(mt + ph / 2) + ")\">" + escape(yLabel) + "</text>\n";

    int ci = 0;
    for (const auto& s : series) {
        const char* color = kPalette[ci % 10];
        std::string pts;
        for (const auto& [x, y] : s.points) pts += num(px(x)) + "," + num(py(y)) + " ";
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        svg += "<text x=\"" + num(ml + pw - 4) + "\" y=\"" + num(mt + 14.0 * (ci + 1)) +
               "\" text-anchor=\"end\" font-size=\"10\" fill=\"" + color + "\">" + escape(s.name) +
               "</text>\n";
        ++ci;
    }
    svg += "</svg>\n";
    return svg;
}

std::string svgBoxPlot(const LatencyStats& stats, const std::string& title, int width, int height) {
    const double mt = 40, mb = 30, ml = 70;
    const double ph = height - mt - mb;
    double lo = stats.min, hi = stats.max;
    if (hi <= lo) hi = lo + 1;
    auto py = [&](double v) { return mt + ph - (v - lo) / (hi - lo) * ph; };
    const double cx = ml + (width - ml - 20) / 2.0;
    const double bw = std::min(80.0, (width - ml - 20) * 0.5);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2.0) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(title) + "</text>\n";
    if (stats.count > 0) {
        svg += "<line x1=\"" + num(cx) + "\" y1=\"" + num(py(stats.min)) + "\" x2=\"" + num(cx) +
               "\" y2=\"" + num(py(stats.max)) + "\" stroke=\"black\"/>\n";
        for (double w : {stats.min, stats.max})
            svg += "<line x1=\"" + num(cx - bw / 4) + "\" y1=\"" + num(py(w)) + "\" x2=\"" +
                   num(cx + bw / 4) + "\" y2=\"" + num(py(w)) + "\" stroke=\"black\"/>\n";
        svg += "<rect x=\"" + num(cx - bw / 2) + "\" y=\"" + num(py(stats.q3)) + "\" width=\"" +
               num(bw) + "\" height=\"" + num(py(stats.q1) - py(stats.q3)) +
               "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + num(cx - bw / 2) + "\" y1=\"" + num(py(stats.median)) + "\" x2=\"" +
               num(cx + bw / 2) + "\" y2=\"" + num(py(stats.median)) +
               "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (auto [v, label] : std::initializer_list<std::pair<double, const char*>>{
                 {stats.min, "min"}, {stats.q1, "q1"}, {stats.median, "med"},
                 {stats.q3, "q3"}, {stats.max, "max"}}) {
            svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py(v) + 3) +
                   "\" text-anchor=\"end\" font-size=\"10\">" + std::string(label) + " " + num(v) +
                   "</text>\n";
        }
    } else {
        svg += "<text x=\"" + num(width / 2.0) + "\" y=\"" + num(height / 2.0) +
               "\" text-anchor=\"middle\" font-size=\"12\">no samples</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace riot
