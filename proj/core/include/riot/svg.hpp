#ifndef RIOT_SVG_HPP
#define RIOT_SVG_HPP

#include <string>
#include <vector>

#include "riot/metrics.hpp"

namespace riot {

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;  // x, y
};

/// Multi-series line chart as a standalone SVG document. Output bytes
/// are deterministic for identical input.
std::string svgLineChart(const std::vector<SvgSeries>& series, const std::string& title,
                         const std::string& xLabel, const std::string& yLabel, int width = 640,
                         int height = 400);

/// Single box-and-whisker plot of a latency distribution.
std::string svgBoxPlot(const LatencyStats& stats, const std::string& title, int width = 320,
                       int height = 400);

}  // namespace riot

#endif
