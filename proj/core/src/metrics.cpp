#include "riot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "riot/errors.hpp"

namespace riot {

double quantile(std::vector<double> values, double p) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    const double h = (static_cast<double>(values.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - lo) * (values[hi] - values[lo]);
}

std::vector<LatencyRow> latencyRows(const EventLog& log) {
    std::unordered_map<std::uint64_t, double> emitAt;
    emitAt.reserve(log.sourceEvents.size());
    for (const auto& e : log.sourceEvents) emitAt[e.msgId] = e.emitMs;

    std::vector<LatencyRow> rows;
    rows.reserve(log.sinkEvents.size());
    for (const auto& e : log.sinkEvents) {
        auto it = emitAt.find(e.causeId);
        if (it == emitAt.end())
            raise(Err::OrphanSinkEvent, "sink event " + std::to_string(e.msgId) +
                                            " has unknown cause " + std::to_string(e.causeId));
        rows.push_back({e.msgId, e.causeId, e.arriveMs - it->second});
    }
    std::sort(rows.begin(), rows.end(), [](const LatencyRow& a, const LatencyRow& b) {
        return a.causeId != b.causeId ? a.causeId < b.causeId : a.msgId < b.msgId;
    });
    return rows;
}

LatencyStats summarizeLatencies(const std::vector<double>& latencies) {
    LatencyStats s;
    s.count = latencies.size();
    if (latencies.empty()) return s;
    std::vector<double> sorted = latencies;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    auto q = [&](double p) {
        const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const auto hi = std::min(lo + 1, sorted.size() - 1);
        return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
    };
    s.q1 = q(0.25);
    s.median = q(0.5);
    s.q3 = q(0.75);
    return s;
}

LatencyStats computeLatency(const EventLog& log) {
    auto rows = latencyRows(log);
    std::vector<double> lat;
    lat.reserve(rows.size());
    for (const auto& r : rows) lat.push_back(r.latencyMs);
    return summarizeLatencies(lat);
}

namespace {

std::vector<double> rateSeries(const std::vector<double>& eventTimes, std::int64_t intervalMs,
                               std::size_t intervals) {
    if (intervalMs <= 0) raise(Err::BadConfig, "interval must be positive");
    std::vector<double> series;
    if (eventTimes.empty() && intervals == 0) return series;
    double last = 0;
    for (double t : eventTimes) last = std::max(last, t);
    std::size_t n = intervals ? intervals
                              : static_cast<std::size_t>(std::floor(last / intervalMs)) + 1;
    series.assign(n, 0.0);
    for (double t : eventTimes) {
        auto b = static_cast<std::size_t>(t / intervalMs);
        if (b < n) series[b] += 1.0;
    }
    const double seconds = intervalMs / 1000.0;
    for (auto& v : series) v /= seconds;
    return series;
}

}  // namespace

std::vector<double> computeThroughput(const EventLog& log, std::int64_t intervalMs,
                                      std::size_t intervals) {
    std::vector<double> times;
    times.reserve(log.sinkEvents.size());
    for (const auto& e : log.sinkEvents) times.push_back(e.arriveMs);
    return rateSeries(times, intervalMs, intervals);
}

std::vector<double> computeInputRate(const EventLog& log, std::int64_t intervalMs,
                                     std::size_t intervals) {
    std::vector<double> times;
    times.reserve(log.sourceEvents.size());
    for (const auto& e : log.sourceEvents) times.push_back(e.emitMs);
    return rateSeries(times, intervalMs, intervals);
}

std::vector<double> computeJitter(const std::vector<double>& throughputSeries,
                                  const std::vector<double>& inputRateSeries, double sigma,
                                  double longTermInputRate) {
    if (throughputSeries.size() != inputRateSeries.size())
        raise(Err::BadConfig, "throughput and input-rate series are not aligned");
    const double denom = sigma * longTermInputRate;
    if (denom == 0) raise(Err::DivisionGuard, "sigma * long-term input rate is zero");
    std::vector<double> jitter;
    jitter.reserve(throughputSeries.size());
    for (std::size_t t = 0; t < throughputSeries.size(); ++t)
        jitter.push_back((throughputSeries[t] - sigma * inputRateSeries[t]) / denom);
    return jitter;
}

}  // namespace riot
