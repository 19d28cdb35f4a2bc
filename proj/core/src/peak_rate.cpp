#include "riot/peak_rate.hpp"

#include <algorithm>
#include <cmath>

#include "riot/engine.hpp"
#include "riot/errors.hpp"
#include "riot/metrics.hpp"

namespace riot {

namespace {

double meanOf(const std::vector<double>& v) {
    if (v.empty()) return 0;
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

PeakProbe probeRate(const TopologySpec& microSpec, const std::string& taskVertex, double rate,
                    const PeakSearchOptions& options) {
    PeakProbe probe;
    probe.rate = rate;

    std::int64_t durationMs = options.probeDurationMs;
    const auto needMs =
        static_cast<std::int64_t>(std::ceil(options.minProbeMessages / rate * 1000.0));
    durationMs = std::max(durationMs, needMs);

    auto workload =
        synthesize(Distribution::Uniform, rate, durationMs, options.sensorCount, options.seed);

    ExecuteOptions eo;
    eo.queueCapacity = options.queueCapacity;
    eo.queueSampleIntervalMs = 50;
    eo.durationLimitMs = durationMs * 4 + 10000;  // failsafe only
    auto result = execute(microSpec, workload, eo);

    probe.achievedRate = result.replay.achievedRate;
    const double intended = result.replay.intendedRate;

    // Latency trend: compare medians of the first and second half of the
    // sink arrivals. An unsustainable rate shows up as steady growth.
    {
        std::vector<double> lat;
        lat.reserve(result.report.latencies.size());
        for (const auto& r : result.report.latencies) lat.push_back(r.latencyMs);
        const std::size_t half = lat.size() / 2;
        if (half > 4) {
            std::vector<double> first(lat.begin(), lat.begin() + half);
            std::vector<double> second(lat.begin() + half, lat.end());
            probe.firstHalfMedianMs = quantile(std::move(first), 0.5);
            probe.lastHalfMedianMs = quantile(std::move(second), 0.5);
        }
    }

    // Queue trend on the benchmarked task's input, past warmup.
    {
        const int v = microSpec.vertexIndex(taskVertex);
        std::vector<double> depth;
        for (const auto& s : result.queueSamples)
            depth.push_back(static_cast<double>(s.perVertex[static_cast<std::size_t>(v)]));
        const std::size_t skip = depth.size() / 6;  // warmup
        if (depth.size() > skip + 6) {
            std::vector<double> body(depth.begin() + skip, depth.end());
            const auto third = static_cast<std::ptrdiff_t>(body.size() / 3);
            probe.earlyQueueMean = meanOf(std::vector<double>(body.begin(), body.begin() + third));
            probe.lateQueueMean = meanOf(std::vector<double>(body.end() - third, body.end()));
        }
    }

    probe.stable = true;
    probe.verdictReason = "steady";
    if (intended > 0 && probe.achievedRate < 0.93 * intended) {
        probe.stable = false;
        probe.verdictReason = "source fell behind schedule";
    } else if (probe.lateQueueMean > std::max(16.0, 2.0 * probe.earlyQueueMean) &&
               probe.lateQueueMean > 32.0) {
        probe.stable = false;
        probe.verdictReason = "input queue growing";
    } else if (probe.lastHalfMedianMs > 2.0 * probe.firstHalfMedianMs + 5.0) {
        probe.stable = false;
        probe.verdictReason = "latency growing";
    }
    return probe;
}

PeakSearchResult findPeakRate(const TopologySpec& microSpec, const std::string& taskVertex,
                              const PeakSearchOptions& options) {
    if (microSpec.vertexIndex(taskVertex) < 0)
        raise(Err::UnknownTask, "'" + taskVertex + "' is not in the topology");

    PeakSearchResult result;
    auto probe = [&](double rate) {
        auto p = probeRate(microSpec, taskVertex, rate, options);
        result.probes.push_back(p);
        return p.stable;
    };

    double lo = options.minRate;
    if (!probe(lo))
        raise(Err::NeverStable, "rate " + std::to_string(lo) + " msg/sec is already unstable");

    double hi = lo;
    while (hi < options.maxRate) {
        const double next = std::min(hi * 2.0, options.maxRate);
        if (!probe(next)) {
            hi = next;
            break;
        }
        lo = next;
        hi = next;
        if (next >= options.maxRate) {
            result.peakRate = lo;
            return result;
        }
    }

    while (hi / lo > 1.0 + options.tolerance) {
        const double mid = std::sqrt(lo * hi);
        if (probe(mid))
            lo = mid;
        else
            hi = mid;
    }
    result.peakRate = lo;
    return result;
}

}  // namespace riot
