#ifndef RIOT_WORKLOAD_HPP
#define RIOT_WORKLOAD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riot/message.hpp"

namespace riot {

/// Column mapping for CSV ingestion. `timestampUnit` is one of
/// "ms", "s", "iso", "auto".
struct SchemaMap {
    std::string sensorIdColumn;
    std::string timestampColumn;
    std::vector<std::string> observationColumns;
    char delimiter = ',';
    std::string timestampUnit = "auto";
};

struct StreamWorkload {
    std::string name;
    std::vector<Message> records;  // sorted by timestampMs, ids preassigned
    std::int64_t nativeSpanMs = 0;
    std::size_t sensorCount = 0;
    std::vector<std::size_t> ratePerSecond;  // messages per second of span
    std::size_t droppedRows = 0;

    bool empty() const { return records.empty(); }
    std::int64_t startMs() const { return records.empty() ? 0 : records.front().timestampMs; }

    /// Recomputes span, sensor count and the rate profile from records.
    void finalize();
};

struct ScalingSpec {
    double temporal = 1.0;
    int spatial = 1;
    std::int64_t spatialWindowMs = 86'400'000;  // day-sized windows by default

    double effective() const { return temporal * spatial; }
};

StreamWorkload ingestCsv(const std::string& path, const SchemaMap& schema);
StreamWorkload ingestSenml(const std::string& path);
/// Dispatches on extension: .json/.senml go to the SenML reader.
StreamWorkload ingest(const std::string& path, const SchemaMap& schema);

/// Time-compresses the trace: t' = t0 + (t - t0)/factor. Record count
/// and distribution shape are preserved; only the time axis shrinks.
StreamWorkload scaleTemporal(const StreamWorkload& w, double factor);

/// Overlays disjoint time windows onto window zero, renaming sensors by
/// window index, so the same trace stands in for `factor` times as many
/// sensors. Requires the trace to span at least `factor` windows.
StreamWorkload scaleSpatial(const StreamWorkload& w, int factor,
                            std::int64_t windowMs = 86'400'000);

StreamWorkload applyScaling(const StreamWorkload& w, const ScalingSpec& scaling);

struct ReplayOptions {
    double temporalFactor = 1.0;  // online temporal scaling at emit time
    /// Emissions later than this past their deadline count as overruns.
    double overrunToleranceMs = 1.0;
    std::function<bool()> stop;  // optional early-stop check
    /// Pacing anchor; sharded replayers pass the whole-trace start so
    /// shards stay mutually aligned. Negative means first record.
    std::int64_t anchorMs = -1;
};

struct ReplayRunStats {
    double intendedRate = 0;
    double achievedRate = 0;
    std::uint64_t emitted = 0;
    std::uint64_t clockOverruns = 0;
    double spanMs = 0;
};

/// Paces the records against the wall clock with inter-arrival gaps
/// proportional to the (scaled) timestamps. Sleeps until each deadline
/// and catches up without sleeping when behind.
ReplayRunStats replay(const StreamWorkload& w,
                      const std::function<void(const Message&)>& emitCallback,
                      const ReplayOptions& options = {});

enum class Distribution { Uniform, SawTooth, Normal, Bimodal, Burst };

Distribution distributionFromName(const std::string& name);
const char* distributionName(Distribution d);

/// Deterministic synthetic workload whose per-second rate profile
/// follows the named shape with maximum `peakRate`.
StreamWorkload synthesize(Distribution distribution, double peakRate, std::int64_t durationMs,
                          int sensorCount, std::uint64_t seed = 1,
                          const std::vector<std::string>& fieldNames = {"value"});

/// Rate histogram resampled to `buckets` equal slices of the span and
/// normalized to sum 1; empty workload gives an empty histogram.
std::vector<double> normalizedRateShape(const StreamWorkload& w, int buckets);

/// Kolmogorov-Smirnov distance between two normalized histograms.
double ksDistance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace riot

#endif
