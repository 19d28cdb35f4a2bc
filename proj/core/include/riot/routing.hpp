#ifndef RIOT_ROUTING_HPP
#define RIOT_ROUTING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "riot/message.hpp"
#include "riot/topology.hpp"

namespace riot {

/// Round-robin position owned by one producer. Routing state is never
/// shared between producers, which keeps each producer's choice sequence
/// deterministic.
struct RouterState {
    std::uint64_t roundRobin = 0;
};

/// Selects target channels for one message among `channels`. Channels
/// are out-edges at the task level and instance queues at the edge
/// level; both use the same semantics:
///   Duplicate - every duplicate channel receives a copy.
///   Shuffle   - exactly one of the shuffle/hash group, round-robin.
///   HashBy(f) - exactly one, hash(field value) mod group size; the same
///               field value always lands on the same channel.
/// Throws MissingHashField if a HashBy channel is selected by a message
/// lacking the field.
std::vector<std::size_t> route(const Message& msg, std::span<const RoutingMode> channels,
                               RouterState& state);

/// Hash used for HashBy routing: stable hash of the field's canonical
/// string form. "sensorId" resolves to the intrinsic message key.
std::uint64_t routingHash(const Message& msg, const std::string& field);

}  // namespace riot

#endif
