#ifndef RIOT_EVENT_LOG_HPP
#define RIOT_EVENT_LOG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace riot {

struct SourceEvent {
    std::uint64_t msgId;
    double emitMs;  // wall-clock ms since run start, monotone clock
};

struct SinkEvent {
    std::uint64_t msgId;
    std::uint64_t causeId;
    double arriveMs;
    std::uint16_t sinkIndex = 0;
};

/// Source/sink capture for one run. Appended per-instance during the run
/// and merged afterwards; all timestamps come from one monotone clock.
struct EventLog {
    std::vector<SourceEvent> sourceEvents;
    std::vector<SinkEvent> sinkEvents;
    std::vector<std::string> sinkNames;
};

}  // namespace riot

#endif
