#include "riot/routing.hpp"

#include "riot/errors.hpp"
#include "riot/stable_hash.hpp"

namespace riot {

std::uint64_t routingHash(const Message& msg, const std::string& field) {
    if (field == "sensorId") return hashKey(msg.sensorId);
    const Scalar* v = msg.find(field);
    if (!v)
        raise(Err::MissingHashField,
              "message " + std::to_string(msg.id) + " lacks hash field '" + field + "'");
    return hashScalar(*v);
}

std::vector<std::size_t> route(const Message& msg, std::span<const RoutingMode> channels,
                               RouterState& state) {
    std::vector<std::size_t> targets;
    std::vector<std::size_t> group;  // non-duplicate channels share one delivery
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (channels[i].kind == RoutingMode::Duplicate)
            targets.push_back(i);
        else
            group.push_back(i);
    }
    if (!group.empty()) {
        const RoutingMode& mode = channels[group.front()];
        std::size_t pick;
        if (mode.kind == RoutingMode::HashBy)
            pick = routingHash(msg, mode.hashField) % group.size();
        else
            pick = state.roundRobin++ % group.size();
        targets.push_back(group[pick]);
    }
    return targets;
}

}  // namespace riot
