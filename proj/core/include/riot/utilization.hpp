#ifndef RIOT_UTILIZATION_HPP
#define RIOT_UTILIZATION_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "riot/metrics.hpp"

namespace riot {

/// Periodic CPU/memory sampler for this process and its children.
/// CPU is normalized so one busy core reads ~100%; memory is resident
/// set against machine memory. There are no per-VM numbers here: the
/// whole benchmark is one process, which stands in for the host average.
class UtilizationSampler {
public:
    explicit UtilizationSampler(std::int64_t intervalMs = 5000);
    ~UtilizationSampler();

    /// False when /proc is unavailable; reports are then marked partial.
    static bool available();

    void start();
    void stop();
    std::vector<UtilizationSample> samples() const;

private:
    void loop();
    bool readCpuTicks(std::uint64_t& ticks) const;
    double readMemPct() const;

    std::int64_t intervalMs_;
    std::atomic<bool> running_{false};
    std::thread worker_;
    mutable std::mutex mu_;
    std::vector<UtilizationSample> samples_;
};

}  // namespace riot

#endif
