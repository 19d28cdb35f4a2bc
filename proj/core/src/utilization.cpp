#include "riot/utilization.hpp"

#include <unistd.h>

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>

namespace riot {

using Clock = std::chrono::steady_clock;

UtilizationSampler::UtilizationSampler(std::int64_t intervalMs) : intervalMs_(intervalMs) {}

UtilizationSampler::~UtilizationSampler() { stop(); }

bool UtilizationSampler::available() {
    std::ifstream stat("/proc/self/stat");
    return stat.good();
}

bool UtilizationSampler::readCpuTicks(std::uint64_t& ticks) const {
    std::ifstream stat("/proc/self/stat");
    if (!stat) return false;
    std::string line;
    std::getline(stat, line);
    // Field 2 (comm) may contain spaces; skip past the closing paren.
    auto paren = line.rfind(')');
    if (paren == std::string::npos) return false;
    std::istringstream rest(line.substr(paren + 2));
    std::string tok;
    // fields 3..13 then utime (14) and stime (15)
    for (int i = 3; i <= 13; ++i) rest >> tok;
    std::uint64_t utime = 0, stime = 0, cutime = 0, cstime = 0;
    rest >> utime >> stime >> cutime >> cstime;
    ticks = utime + stime + cutime + cstime;
    return true;
}

double UtilizationSampler::readMemPct() const {
    std::uint64_t rssKb = 0, totalKb = 0;
    {
        std::ifstream status("/proc/self/status");
        std::string line;
        while (std::getline(status, line)) {
            if (line.rfind("VmRSS:", 0) == 0) {
                std::istringstream is(line.substr(6));
                is >> rssKb;
                break;
            }
        }
    }
    {
        std::ifstream mem("/proc/meminfo");
        std::string line;
        while (std::getline(mem, line)) {
            if (line.rfind("MemTotal:", 0) == 0) {
                std::istringstream is(line.substr(9));
                is >> totalKb;
                break;
            }
        }
    }
    if (totalKb == 0) return 0;
    return 100.0 * static_cast<double>(rssKb) / static_cast<double>(totalKb);
}

void UtilizationSampler::start() {
    if (running_.exchange(true)) return;
    {
        std::lock_guard lock(mu_);
        samples_.clear();
    }
    worker_ = std::thread([this] { loop(); });
}

void UtilizationSampler::stop() {
    if (!running_.exchange(false)) return;
    if (worker_.joinable()) worker_.join();
}

std::vector<UtilizationSample> UtilizationSampler::samples() const {
    std::lock_guard lock(mu_);
    return samples_;
}

void UtilizationSampler::loop() {
    const auto start = Clock::now();
    const double ticksPerSec = static_cast<double>(sysconf(_SC_CLK_TCK));
    std::uint64_t lastTicks = 0;
    if (!readCpuTicks(lastTicks)) return;
    auto lastTime = Clock::now();

    while (running_.load()) {
        // Sleep in slices so stop() is prompt even with long intervals.
        auto wake = lastTime + std::chrono::milliseconds(intervalMs_);
        while (running_.load() && Clock::now() < wake)
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        if (!running_.load()) break;

        std::uint64_t ticks = 0;
        if (!readCpuTicks(ticks)) break;
        const auto now = Clock::now();
        const double wallSec = std::chrono::duration<double>(now - lastTime).count();
        const double cpuSec = (ticks - lastTicks) / ticksPerSec;
        UtilizationSample s;
        s.tMs = std::chrono::duration<double, std::milli>(now - start).count();
        s.cpuPct = wallSec > 0 ? 100.0 * cpuSec / wallSec : 0.0;
        s.memPct = readMemPct();
        {
            std::lock_guard lock(mu_);
            samples_.push_back(s);
        }
        lastTicks = ticks;
        lastTime = now;
    }
}

}  // namespace riot
