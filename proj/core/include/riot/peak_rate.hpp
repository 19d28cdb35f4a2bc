#ifndef RIOT_PEAK_RATE_HPP
#define RIOT_PEAK_RATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "riot/topology.hpp"

namespace riot {

struct PeakProbe {
    double rate = 0;
    double achievedRate = 0;
    double firstHalfMedianMs = 0;
    double lastHalfMedianMs = 0;
    double earlyQueueMean = 0;
    double lateQueueMean = 0;
    bool stable = false;
    const char* verdictReason = "";
};

struct PeakSearchOptions {
    double minRate = 4;
    double maxRate = 2'000'000;
    double tolerance = 0.05;  // relative bracket width at termination
    std::int64_t probeDurationMs = 2500;
    std::int64_t minProbeMessages = 40;  // slow tasks get longer probes
    int sensorCount = 8;
    std::uint64_t seed = 11;
    std::size_t queueCapacity = 1024;
};

struct PeakSearchResult {
    double peakRate = 0;
    std::vector<PeakProbe> probes;
};

/// Probes `microSpec` (source -> task -> sink) at a fixed input rate and
/// classifies it stable when, over the trailing window, the task's input
/// queue and the median latency are non-increasing and the source kept
/// pace with its schedule.
PeakProbe probeRate(const TopologySpec& microSpec, const std::string& taskVertex, double rate,
                    const PeakSearchOptions& options = {});

/// Doubling bracket followed by a geometric bisection down to
/// `tolerance`; returns the largest stable rate found. Throws
/// NeverStable when even `minRate` is unstable.
PeakSearchResult findPeakRate(const TopologySpec& microSpec, const std::string& taskVertex,
                              const PeakSearchOptions& options = {});

}  // namespace riot

#endif
