#include "riot/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "riot/errors.hpp"

namespace riot {

const char* patternName(TaskPattern p) {
    switch (p) {
        case TaskPattern::Source: return "Source";
        case TaskPattern::Sink: return "Sink";
        case TaskPattern::Transform: return "Transform";
        case TaskPattern::Filter: return "Filter";
        case TaskPattern::FlatMap: return "FlatMap";
        case TaskPattern::Aggregate: return "Aggregate";
    }
    return "?";
}

const TaskDescriptor* TopologySpec::vertex(const std::string& name) const {
    int i = vertexIndex(name);
    return i < 0 ? nullptr : &vertices[i];
}

int TopologySpec::vertexIndex(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> TopologySpec::outEdges(int vertexIdx) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (vertexIndex(edges[e].from) == vertexIdx) out.push_back(static_cast<int>(e));
    return out;
}

std::vector<int> TopologySpec::inEdges(int vertexIdx) const {
    std::vector<int> in;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (vertexIndex(edges[e].to) == vertexIdx) in.push_back(static_cast<int>(e));
    return in;
}

void validateTopology(const TopologySpec& spec) {
    const auto& vs = spec.vertices;
    if (vs.empty()) raise(Err::EmptyTopology, "topology '" + spec.name + "' has no vertices");

    std::set<std::string> names;
    for (const auto& v : vs) {
        if (!names.insert(v.name).second)
            raise(Err::DuplicateVertexName, "vertex '" + v.name + "' declared twice");
        if (v.parallelism < 1)
            raise(Err::BadConfig, "vertex '" + v.name + "' parallelism must be positive");
        if (v.pattern == TaskPattern::Aggregate && !v.window)
            raise(Err::BadConfig, "aggregate vertex '" + v.name + "' declares no window");
    }

    const int n = static_cast<int>(vs.size());
    std::vector<std::vector<int>> out(n), in(n);
    for (const auto& e : spec.edges) {
        int f = spec.vertexIndex(e.from);
        int t = spec.vertexIndex(e.to);
        if (f < 0 || t < 0)
            raise(Err::DanglingEdge, "edge " + e.from + " -> " + e.to + " references unknown vertex");
        out[f].push_back(t);
        in[t].push_back(f);
    }

    bool haveSource = false, haveSink = false;
    for (int i = 0; i < n; ++i) {
        const bool isSource = in[i].empty();
        const bool isSink = out[i].empty();
        haveSource |= isSource;
        haveSink |= isSink;
        if (isSource && vs[i].pattern != TaskPattern::Source)
            raise(Err::NotConnected, "vertex '" + vs[i].name + "' has no in-edges but is not a Source");
        if (!isSource && vs[i].pattern == TaskPattern::Source)
            raise(Err::BadConfig, "source vertex '" + vs[i].name + "' must have no in-edges");
        if (isSink && vs[i].pattern != TaskPattern::Sink && n > 1)
            raise(Err::NotConnected, "vertex '" + vs[i].name + "' has no out-edges but is not a Sink");
        if (!isSink && vs[i].pattern == TaskPattern::Sink)
            raise(Err::BadConfig, "sink vertex '" + vs[i].name + "' must have no out-edges");
    }
    if (!haveSource || !haveSink)
        raise(Err::CycleWithoutSource, "topology '" + spec.name + "' lacks a source or sink");

    // Kahn's algorithm; leftovers mean a cycle. Cycles are rejected even
    // where a DSPS would tolerate them; none of the bundled apps use one.
    {
        std::vector<int> indeg(n, 0);
        for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(in[i].size());
        std::deque<int> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        int seen = 0;
        while (!ready.empty()) {
            int v = ready.front();
            ready.pop_front();
            ++seen;
            for (int t : out[v])
                if (--indeg[t] == 0) ready.push_back(t);
        }
        if (seen != n)
            raise(Err::CycleWithoutSource, "topology '" + spec.name + "' contains a cycle");
    }

    // Weak connectivity.
    {
        std::vector<bool> visited(n, false);
        std::deque<int> frontier{0};
        visited[0] = true;
        int seen = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop_front();
            auto visit = [&](int t) {
                if (!visited[t]) {
                    visited[t] = true;
                    ++seen;
                    frontier.push_back(t);
                }
            };
            for (int t : out[v]) visit(t);
            for (int t : in[v]) visit(t);
        }
        if (seen != n)
            raise(Err::NotConnected, "topology '" + spec.name + "' is not connected");
    }

    for (const auto& e : spec.edges) {
        if (e.mode.kind == RoutingMode::HashBy) {
            if (e.mode.hashField.empty())
                raise(Err::BadConfig, "hash edge " + e.from + " -> " + e.to + " names no field");
            const TaskDescriptor* from = spec.vertex(e.from);
            if (e.mode.hashField != "sensorId" && !from->outSchema.empty() &&
                std::find(from->outSchema.begin(), from->outSchema.end(), e.mode.hashField) ==
                    from->outSchema.end())
                raise(Err::HashFieldUnknown, "field '" + e.mode.hashField +
                                                 "' is not in the declared schema of '" + e.from + "'");
        }
    }

    for (int i = 0; i < n; ++i) {
        if (!vs[i].stateful || vs[i].parallelism <= 1) continue;
        for (const auto& e : spec.edges) {
            if (spec.vertexIndex(e.to) == i && e.mode.kind != RoutingMode::HashBy)
                raise(Err::StatefulParallelWithoutHash,
                      "stateful vertex '" + vs[i].name + "' with parallelism " +
                          std::to_string(vs[i].parallelism) + " has a non-hash in-edge from '" +
                          e.from + "'");
        }
    }
}

TopologySpec defineTopology(std::string name, std::vector<TaskDescriptor> vertices,
                            std::vector<EdgeSpec> edges) {
    TopologySpec spec{std::move(name), std::move(vertices), std::move(edges)};
    validateTopology(spec);
    return spec;
}

std::vector<double> propagateRates(const TopologySpec& spec, double sourceRate) {
    const int n = static_cast<int>(spec.vertices.size());
    std::vector<double> inRate(n, 0.0);

    // Topological order (the spec is validated, so this terminates).
    std::vector<int> indeg(n, 0), order;
    for (const auto& e : spec.edges) indeg[spec.vertexIndex(e.to)]++;
    std::deque<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (const auto& e : spec.edges)
            if (spec.vertexIndex(e.from) == v && --indeg[spec.vertexIndex(e.to)] == 0)
                ready.push_back(spec.vertexIndex(e.to));
    }

    for (int v : order) {
        const auto& task = spec.vertices[v];
        double outRate;
        if (task.pattern == TaskPattern::Source) {
            inRate[v] = sourceRate;
            outRate = sourceRate;
        } else {
            outRate = inRate[v] * task.selectivity;
        }
        auto outs = spec.outEdges(v);
        if (outs.empty()) continue;
        int splitCount = 0;
        for (int e : outs)
            if (spec.edges[e].mode.kind != RoutingMode::Duplicate) ++splitCount;
        for (int e : outs) {
            const auto& edge = spec.edges[e];
            double share = edge.mode.kind == RoutingMode::Duplicate ? outRate : outRate / splitCount;
            inRate[spec.vertexIndex(edge.to)] += share;
        }
    }
    return inRate;
}

double declaredSelectivity(const TopologySpec& spec) {
    auto rates = propagateRates(spec, 1.0);
    double sinkRate = 0;
    for (std::size_t i = 0; i < spec.vertices.size(); ++i)
        if (spec.vertices[i].pattern == TaskPattern::Sink) sinkRate += rates[i];
    return sinkRate;
}

}  // namespace riot
