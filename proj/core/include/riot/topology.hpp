#ifndef RIOT_TOPOLOGY_HPP
#define RIOT_TOPOLOGY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riot/task.hpp"

namespace riot {

enum class TaskPattern { Source, Sink, Transform, Filter, FlatMap, Aggregate };

const char* patternName(TaskPattern p);

struct RoutingMode {
    enum Kind { Duplicate, Shuffle, HashBy } kind = Shuffle;
    std::string hashField;  // set iff kind == HashBy

    static RoutingMode duplicate() { return {Duplicate, {}}; }
    static RoutingMode shuffle() { return {Shuffle, {}}; }
    static RoutingMode hashBy(std::string field) { return {HashBy, std::move(field)}; }
};

struct WindowSpec {
    enum Kind { Count, Time } kind = Count;
    std::int64_t width = 1;  // message count, or milliseconds of event time
    bool keyed = true;       // window per sensorId vs global
};

class Subscription;  // services/pubsub.hpp

/// How a Source vertex produces messages. Replay sources are fed shards
/// of the run workload; Timer sources fire on a benchmark-time period;
/// Subscribe sources drain a pub-sub subscription until replay ends.
struct SourceSpec {
    enum Kind { Replay, Timer, Subscribe } kind = Replay;
    std::int64_t timerPeriodMs = 60000;
    std::shared_ptr<Subscription> subscription;
    std::string payloadField = "payload";
};

struct TaskDescriptor {
    std::string name;
    TaskPattern pattern = TaskPattern::Transform;
    int parallelism = 1;
    /// Declared selectivity as output messages per input message
    /// (informational; drives the jitter expectation and the planner).
    double selectivity = 1.0;
    bool stateful = false;
    TaskFactory factory;                  // unset for Source/Sink vertices
    std::optional<WindowSpec> window;     // required for Aggregate pattern
    std::optional<SourceSpec> source;     // Source vertices only
    std::vector<std::string> outSchema;   // declared output fields, may be empty
};

struct EdgeSpec {
    std::string from;
    std::string to;
    RoutingMode mode;
};

struct TopologySpec {
    std::string name;
    std::vector<TaskDescriptor> vertices;
    std::vector<EdgeSpec> edges;

    const TaskDescriptor* vertex(const std::string& name) const;
    int vertexIndex(const std::string& name) const;  // -1 if absent
    std::vector<int> outEdges(int vertexIdx) const;  // indices into edges
    std::vector<int> inEdges(int vertexIdx) const;
};

/// Validates and returns the topology. Checks the structural invariants:
/// unique names, resolvable edges, at least one source and sink, weak
/// connectivity, acyclicity, hash-field resolvability against declared
/// upstream schemas, window presence on aggregates, and key affinity for
/// parallel stateful tasks.
TopologySpec defineTopology(std::string name, std::vector<TaskDescriptor> vertices,
                            std::vector<EdgeSpec> edges);

/// Re-runs validation on an existing spec.
void validateTopology(const TopologySpec& spec);

/// Expected per-vertex input rates for a unit source rate, propagated
/// through declared selectivities and edge routing (duplicate edges each
/// carry the full stream, shuffle/hash groups split it).
std::vector<double> propagateRates(const TopologySpec& spec, double sourceRate);

/// Dataflow-level selectivity: expected sink arrival rate per unit
/// source rate. Used as the jitter expectation.
double declaredSelectivity(const TopologySpec& spec);

}  // namespace riot

#endif
