#ifndef RIOT_REPORT_HPP
#define RIOT_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "riot/metrics.hpp"

namespace riot {

/// Writes latency.csv, throughput.csv, jitter.csv, utilization.csv,
/// summary.txt and the SVG charts into outDir. Re-running with the same
/// report produces byte-identical CSVs.
std::vector<std::string> writeReport(const MetricsReport& report,
                                     const std::filesystem::path& outDir);

}  // namespace riot

#endif
