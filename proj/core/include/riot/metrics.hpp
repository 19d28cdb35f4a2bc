#ifndef RIOT_METRICS_HPP
#define RIOT_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "riot/event_log.hpp"

namespace riot {

struct LatencyStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    std::size_t count = 0;
};

struct LatencyRow {
    std::uint64_t msgId;
    std::uint64_t causeId;
    double latencyMs;
};

struct UtilizationSample {
    double tMs;
    double cpuPct;  // process tree, normalized to one core
    double memPct;  // resident set vs machine memory
};

struct RunMeta {
    std::string topology;
    std::string workload;
    double durationMs = 0;
    std::int64_t intervalMs = 1000;
    double selectivity = 1.0;
    std::uint64_t seed = 0;
};

struct MetricsReport {
    LatencyStats latencyStats;
    std::vector<LatencyRow> latencies;
    std::vector<double> throughputSeries;   // output msg/sec per interval
    std::vector<double> inputRateSeries;    // source msg/sec per interval
    std::vector<double> jitterSeries;
    std::vector<UtilizationSample> utilizationSamples;
    RunMeta runMeta;
    bool partial = false;  // set when the utilization sampler is unavailable
};

/// Linear-interpolation (type-7) quantile of an unsorted sample.
double quantile(std::vector<double> values, double p);

/// Per-message end-to-end latency: sink arrival minus the emit time of
/// the causal source ancestor. Throws OrphanSinkEvent if a sink event's
/// causeId never appeared at a source.
std::vector<LatencyRow> latencyRows(const EventLog& log);
LatencyStats computeLatency(const EventLog& log);
LatencyStats summarizeLatencies(const std::vector<double>& latencies);

/// Sink arrivals per interval, in msg/sec. `intervals` fixes the series
/// length; pass 0 to size it from the last event.
std::vector<double> computeThroughput(const EventLog& log, std::int64_t intervalMs,
                                      std::size_t intervals = 0);
std::vector<double> computeInputRate(const EventLog& log, std::int64_t intervalMs,
                                     std::size_t intervals = 0);

/// Normalized deviation of observed output rate from the
/// selectivity-expected rate:  J = (out - sigma*in) / (sigma * longTermIn).
std::vector<double> computeJitter(const std::vector<double>& throughputSeries,
                                  const std::vector<double>& inputRateSeries, double sigma,
                                  double longTermInputRate);

}  // namespace riot

#endif
