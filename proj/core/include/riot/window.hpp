#ifndef RIOT_WINDOW_HPP
#define RIOT_WINDOW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riot/message.hpp"
#include "riot/topology.hpp"

namespace riot {

/// Tumbling window accumulator. Count windows fill to `width` messages;
/// time windows cover [start, start + width) in event time, anchored at
/// the first message seen for the key. Partial windows are held, never
/// emitted.
class WindowAccumulator {
public:
    explicit WindowAccumulator(WindowSpec spec) : spec_(spec) {}

    /// Returns the completed batch exactly when the window closes.
    std::optional<std::vector<Message>> add(const Message& msg);

    const WindowSpec& spec() const { return spec_; }

private:
    struct KeyState {
        std::vector<Message> buffer;
        std::int64_t windowStart = 0;
        bool started = false;
    };

    std::optional<std::vector<Message>> addTo(KeyState& st, const Message& msg);

    WindowSpec spec_;
    KeyState global_;
    std::map<std::string, KeyState> byKey_;
};

}  // namespace riot

#endif
