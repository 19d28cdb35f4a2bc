#include "riot/window.hpp"

namespace riot {

std::optional<std::vector<Message>> WindowAccumulator::add(const Message& msg) {
    if (!spec_.keyed) return addTo(global_, msg);
    return addTo(byKey_[msg.sensorId], msg);
}

std::optional<std::vector<Message>> WindowAccumulator::addTo(KeyState& st, const Message& msg) {
    if (spec_.kind == WindowSpec::Count) {
        st.buffer.push_back(msg);
        if (static_cast<std::int64_t>(st.buffer.size()) < spec_.width) return std::nullopt;
        std::vector<Message> batch;
        batch.swap(st.buffer);
        return batch;
    }

    // Time windows tumble on event time, anchored at the first message.
    if (!st.started) {
        st.started = true;
        st.windowStart = msg.timestampMs;
    }
    if (msg.timestampMs - st.windowStart < spec_.width) {
        st.buffer.push_back(msg);
        return std::nullopt;
    }
    std::vector<Message> batch;
    batch.swap(st.buffer);
    const std::int64_t hops = (msg.timestampMs - st.windowStart) / spec_.width;
    st.windowStart += hops * spec_.width;
    st.buffer.push_back(msg);
    if (batch.empty()) return std::nullopt;  // skipped over an empty window
    return batch;
}

}  // namespace riot
