#ifndef RIOT_ENGINE_HPP
#define RIOT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "riot/event_log.hpp"
#include "riot/metrics.hpp"
#include "riot/topology.hpp"
#include "riot/workload.hpp"

namespace riot {

enum class QueuePolicy { Block, Fail };

struct ExecuteOptions {
    std::size_t queueCapacity = 1024;  // per instance input queue
    QueuePolicy queuePolicy = QueuePolicy::Block;
    std::int64_t durationLimitMs = 0;  // 0 = run until workload drained
    std::int64_t metricsIntervalMs = 1000;
    std::int64_t queueSampleIntervalMs = 100;
    double onlineTemporalFactor = 1.0;  // applied by replay sources at emit time
    bool sampleUtilization = false;
    std::int64_t utilizationIntervalMs = 5000;
    double selectivityOverride = 0;  // 0 = derive from declared task selectivities
};

struct TaskStats {
    std::uint64_t in = 0;
    std::uint64_t out = 0;
};

struct QueueSample {
    double tMs;
    std::vector<std::size_t> perVertex;  // summed over instances
};

struct ReplayStats {
    double intendedRate = 0;  // msg/sec implied by the scaled timestamps
    double achievedRate = 0;
    std::uint64_t emitted = 0;
    std::uint64_t clockOverruns = 0;
    double spanMs = 0;
};

struct RunResult {
    EventLog log;
    MetricsReport report;
    std::map<std::string, TaskStats> taskStats;
    std::vector<QueueSample> queueSamples;
    std::vector<std::string> queueSampleVertices;
    ReplayStats replay;
    double wallMs = 0;
    bool hitDurationLimit = false;

    double observedSelectivity(const std::string& task) const;
};

/// Runs the dataflow over the workload: injects every source message
/// (sharded across replay-source instances by sensorId), blocks
/// producers on full queues, and ends when sources are exhausted and the
/// queues have drained, or at the duration limit. Throws TaskPanicked if
/// user logic throws, and QueueOverflowPolicyViolated under the Fail
/// queue policy.
RunResult execute(const TopologySpec& spec, const StreamWorkload& workload,
                  const ExecuteOptions& options = {});

}  // namespace riot

#endif
