#include "riot/engine.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "riot/errors.hpp"
#include "riot/queue.hpp"
#include "riot/routing.hpp"
#include "riot/services/pubsub.hpp"
#include "riot/stable_hash.hpp"

namespace riot {

namespace {

using Clock = std::chrono::steady_clock;

struct Envelope {
    Message msg;
    bool eos = false;
};

using MsgQueue = BoundedQueue<Envelope>;

// Thrown while emitting into closed queues during an abort; unwinds the
// worker without reporting a task failure.
struct AbortEmission {};

// Wraps infrastructure errors raised inside Emitter::emit so they are
// not misreported as user-task panics.
struct EmitterFailure {
    std::exception_ptr inner;
};

struct OutEdge {
    RoutingMode mode;
    bool targetStateful = false;
    std::vector<MsgQueue*> targets;
    std::uint64_t rr = 0;
};

struct Instance {
    int vertexIdx = 0;
    int instanceIdx = 0;
    bool isSource = false;
    bool isSink = false;
    std::uint16_t sinkIndex = 0;
    std::unique_ptr<MsgQueue> in;
    std::unique_ptr<TaskLogic> logic;
    int expectedEos = 0;
    int eosSeen = 0;
    TaskStats stats;
    std::vector<SourceEvent> srcEvents;
    std::vector<SinkEvent> sinkEvents;
    StreamWorkload shard;
    ReplayRunStats shardStats;

    std::vector<RoutingMode> edgeModes;
    std::vector<OutEdge> outs;
    RouterState edgeRouter;
};

struct RunContext {
    const TopologySpec* spec = nullptr;
    const ExecuteOptions* opts = nullptr;
    std::vector<std::unique_ptr<Instance>> instances;
    Clock::time_point runStart;

    std::atomic<bool> stop{false};
    std::atomic<bool> aborted{false};
    std::atomic<bool> auxSourceStop{false};
    std::atomic<int> replayDone{0};
    int replayTotal = 0;
    std::atomic<std::uint64_t> derivedId{1ull << 32};

    std::mutex errorMu;
    std::exception_ptr firstError;

    double nowMs() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - runStart).count();
    }

    void fail(std::exception_ptr e) {
        {
            std::lock_guard lock(errorMu);
            if (!firstError) firstError = e;
        }
        abortAll();
    }

    void abortAll() {
        aborted.store(true);
        stop.store(true);
        for (auto& inst : instances)
            if (inst->in) inst->in->close();
    }

    void push(MsgQueue& q, Envelope&& env) {
        if (opts->queuePolicy == QueuePolicy::Block) {
            if (!q.push(std::move(env))) throw AbortEmission{};
            return;
        }
        if (!q.tryPush(std::move(env))) {
            if (aborted.load()) throw AbortEmission{};
            throw RiotError(Err::QueueOverflowPolicyViolated,
                            "queue full under fail policy in '" + spec->name + "'");
        }
    }

    void deliver(Instance& from, Message&& msg) {
        if (from.outs.empty()) return;
        auto picks = route(msg, from.edgeModes, from.edgeRouter);
        for (std::size_t i = 0; i < picks.size(); ++i) {
            OutEdge& oe = from.outs[picks[i]];
            const std::size_t n = oe.targets.size();
            std::size_t t;
            switch (oe.mode.kind) {
                case RoutingMode::HashBy:
                    t = routingHash(msg, oe.mode.hashField) % n;
                    break;
                case RoutingMode::Shuffle:
                    t = oe.rr++ % n;
                    break;
                case RoutingMode::Duplicate:
                default:
                    // A duplicate edge fans out at task level; instance
                    // selection still keeps key affinity for stateful targets.
                    t = oe.targetStateful ? hashKey(msg.sensorId) % n : oe.rr++ % n;
                    break;
            }
            if (i + 1 == picks.size())
                push(*oe.targets[t], Envelope{std::move(msg), false});
            else
                push(*oe.targets[t], Envelope{msg, false});
        }
    }

    void sendEos(Instance& from) {
        for (OutEdge& oe : from.outs)
            for (MsgQueue* q : oe.targets) q->push(Envelope{{}, true});
    }
};

class WorkerEmitter : public Emitter {
public:
    WorkerEmitter(RunContext& ctx, Instance& inst) : ctx_(ctx), inst_(inst) {}

    void setCurrent(const Message* m) { current_ = m; }

    void emit(Message msg) override {
        msg.id = ctx_.derivedId.fetch_add(1, std::memory_order_relaxed);
        if (current_) {
            if (!msg.causeId) msg.causeId = current_->causeId ? *current_->causeId : current_->id;
            if (msg.sensorId.empty()) msg.sensorId = current_->sensorId;
        }
        inst_.stats.out++;
        try {
            ctx_.deliver(inst_, std::move(msg));
        } catch (AbortEmission&) {
            throw;
        } catch (...) {
            throw EmitterFailure{std::current_exception()};
        }
    }

private:
    RunContext& ctx_;
    Instance& inst_;
    const Message* current_ = nullptr;
};

void taskLoop(RunContext& ctx, Instance& inst) {
    WorkerEmitter emitter(ctx, inst);
    while (true) {
        auto env = inst.in->pop();
        if (!env) return;  // closed: aborted run
        if (env->eos) {
            if (++inst.eosSeen == inst.expectedEos) break;
            continue;
        }
        inst.stats.in++;
        if (inst.isSink) {
            const Message& m = env->msg;
            inst.sinkEvents.push_back(
                {m.id, m.causeId ? *m.causeId : m.id, ctx.nowMs(), inst.sinkIndex});
            continue;
        }
        emitter.setCurrent(&env->msg);
        try {
            inst.logic->process(env->msg, emitter);
        } catch (AbortEmission&) {
            return;
        } catch (EmitterFailure& f) {
            ctx.fail(f.inner);
            return;
        } catch (const std::exception& e) {
            const auto& name = ctx.spec->vertices[inst.vertexIdx].name;
            ctx.fail(std::make_exception_ptr(
                RiotError(Err::TaskPanicked, "task '" + name + "': " + e.what())));
            return;
        }
    }
    if (inst.logic) {
        emitter.setCurrent(nullptr);
        try {
            inst.logic->flush(emitter);
        } catch (AbortEmission&) {
            return;
        } catch (EmitterFailure& f) {
            ctx.fail(f.inner);
            return;
        } catch (const std::exception& e) {
            const auto& name = ctx.spec->vertices[inst.vertexIdx].name;
            ctx.fail(std::make_exception_ptr(
                RiotError(Err::TaskPanicked, "task '" + name + "' flush: " + e.what())));
            return;
        }
    }
    try {
        ctx.sendEos(inst);
    } catch (AbortEmission&) {
    }
}

void replaySourceLoop(RunContext& ctx, Instance& inst, std::int64_t anchorMs) {
    ReplayOptions ro;
    ro.temporalFactor = ctx.opts->onlineTemporalFactor;
    ro.anchorMs = anchorMs;
    ro.stop = [&ctx] { return ctx.stop.load(); };
    try {
        inst.shardStats = replay(
            inst.shard,
            [&](const Message& rec) {
                Message m = rec;
                m.causeId = m.id;
                inst.srcEvents.push_back({m.id, ctx.nowMs()});
                inst.stats.out++;
                ctx.deliver(inst, std::move(m));
            },
            ro);
        if (ctx.replayDone.fetch_add(1) + 1 == ctx.replayTotal) ctx.auxSourceStop.store(true);
        ctx.sendEos(inst);
    } catch (AbortEmission&) {
    } catch (const std::exception&) {
        ctx.fail(std::current_exception());
    }
}

void timerSourceLoop(RunContext& ctx, Instance& inst, const SourceSpec& src) {
    try {
        std::uint64_t tick = 0;
        auto next = ctx.runStart + std::chrono::milliseconds(src.timerPeriodMs);
        while (!ctx.stop.load()) {
            while (!ctx.stop.load() && Clock::now() < next)
                std::this_thread::sleep_for(std::chrono::milliseconds(5));
            if (ctx.stop.load()) break;
            Message m;
            m.id = ctx.derivedId.fetch_add(1, std::memory_order_relaxed);
            m.causeId = m.id;
            m.sensorId = "timer";
            m.timestampMs = static_cast<std::int64_t>(ctx.nowMs());
            m.fields.push_back({"tick", static_cast<double>(tick++)});
            inst.srcEvents.push_back({m.id, ctx.nowMs()});
            inst.stats.out++;
            ctx.deliver(inst, std::move(m));
            next += std::chrono::milliseconds(src.timerPeriodMs);
        }
        ctx.sendEos(inst);
    } catch (AbortEmission&) {
    } catch (const std::exception&) {
        ctx.fail(std::current_exception());
    }
}

void subscribeSourceLoop(RunContext& ctx, Instance& inst, const SourceSpec& src) {
    try {
        while (true) {
            if (ctx.stop.load()) break;
            auto payload = src.subscription ? src.subscription->pollFor(20) : std::nullopt;
            if (!payload) {
                if (ctx.auxSourceStop.load() || !src.subscription || src.subscription->closed())
                    break;
                continue;
            }
            Message m;
            m.id = ctx.derivedId.fetch_add(1, std::memory_order_relaxed);
            m.causeId = m.id;
            m.sensorId = "broker";
            m.timestampMs = static_cast<std::int64_t>(ctx.nowMs());
            m.fields.push_back({src.payloadField, *payload});
            inst.srcEvents.push_back({m.id, ctx.nowMs()});
            inst.stats.out++;
            ctx.deliver(inst, std::move(m));
        }
        ctx.sendEos(inst);
    } catch (AbortEmission&) {
    } catch (const std::exception&) {
        ctx.fail(std::current_exception());
    }
}

}  // namespace

double RunResult::observedSelectivity(const std::string& task) const {
    auto it = taskStats.find(task);
    if (it == taskStats.end() || it->second.in == 0) return 0;
    return static_cast<double>(it->second.out) / static_cast<double>(it->second.in);
}

RunResult execute(const TopologySpec& spec, const StreamWorkload& workload,
                  const ExecuteOptions& options) {
    validateTopology(spec);

    RunContext ctx;
    ctx.spec = &spec;
    ctx.opts = &options;

    const int n = static_cast<int>(spec.vertices.size());
    std::vector<std::vector<Instance*>> byVertex(n);
    std::vector<std::string> sinkNames;

    for (int v = 0; v < n; ++v) {
        const TaskDescriptor& task = spec.vertices[v];
        for (int k = 0; k < task.parallelism; ++k) {
            auto inst = std::make_unique<Instance>();
            inst->vertexIdx = v;
            inst->instanceIdx = k;
            inst->isSource = task.pattern == TaskPattern::Source;
            inst->isSink = task.pattern == TaskPattern::Sink;
            if (inst->isSink) {
                inst->sinkIndex = static_cast<std::uint16_t>(sinkNames.size());
                if (k == 0) sinkNames.push_back(task.name);
                else inst->sinkIndex = static_cast<std::uint16_t>(sinkNames.size() - 1);
            }
            if (!inst->isSource)
                inst->in = std::make_unique<MsgQueue>(options.queueCapacity);
            if (!inst->isSource && !inst->isSink) {
                if (!task.factory)
                    raise(Err::BadConfig, "vertex '" + task.name + "' has no task factory");
                inst->logic = task.factory(k);
            }
            byVertex[v].push_back(inst.get());
            ctx.instances.push_back(std::move(inst));
        }
    }

    // Wire edges: every producer instance can reach every instance of
    // each downstream vertex; routing picks one (or all) per message.
    for (const auto& e : spec.edges) {
        const int f = spec.vertexIndex(e.from);
        const int t = spec.vertexIndex(e.to);
        for (Instance* from : byVertex[f]) {
            OutEdge oe;
            oe.mode = e.mode;
            oe.targetStateful = spec.vertices[t].stateful;
            for (Instance* target : byVertex[t]) oe.targets.push_back(target->in.get());
            from->edgeModes.push_back(e.mode);
            from->outs.push_back(std::move(oe));
        }
        for (Instance* target : byVertex[t])
            target->expectedEos += spec.vertices[f].parallelism;
    }

    // Shard the workload across replay-source instances by sensorId so
    // per-sensor order survives data-parallel generation.
    std::vector<Instance*> replayInstances;
    bool hasTimer = false;
    for (int v = 0; v < n; ++v) {
        const auto& task = spec.vertices[v];
        if (task.pattern != TaskPattern::Source) continue;
        const SourceSpec src = task.source.value_or(SourceSpec{});
        if (src.kind == SourceSpec::Replay)
            for (Instance* inst : byVertex[v]) replayInstances.push_back(inst);
        if (src.kind == SourceSpec::Timer) hasTimer = true;
    }
    ctx.replayTotal = static_cast<int>(replayInstances.size());
    if (!replayInstances.empty()) {
        for (const Message& rec : workload.records) {
            const std::size_t s = hashKey(rec.sensorId) % replayInstances.size();
            replayInstances[s]->shard.records.push_back(rec);
        }
        for (Instance* inst : replayInstances) inst->shard.finalize();
    }
    if (hasTimer && ctx.replayTotal == 0 && options.durationLimitMs <= 0)
        raise(Err::BadConfig, "timer-driven topology needs a duration limit");

    const std::int64_t anchorMs = workload.records.empty() ? 0 : workload.startMs();

    ctx.runStart = Clock::now();

    std::atomic<int> finished{0};
    const int total = static_cast<int>(ctx.instances.size());
    std::vector<std::thread> threads;
    threads.reserve(ctx.instances.size());
    for (auto& instPtr : ctx.instances) {
        Instance* inst = instPtr.get();
        const TaskDescriptor& task = spec.vertices[inst->vertexIdx];
        threads.emplace_back([&ctx, inst, &task, anchorMs, &finished] {
            if (inst->isSource) {
                const SourceSpec src = task.source.value_or(SourceSpec{});
                switch (src.kind) {
                    case SourceSpec::Replay: replaySourceLoop(ctx, *inst, anchorMs); break;
                    case SourceSpec::Timer: timerSourceLoop(ctx, *inst, src); break;
                    case SourceSpec::Subscribe: subscribeSourceLoop(ctx, *inst, src); break;
                }
            } else {
                taskLoop(ctx, *inst);
            }
            finished.fetch_add(1);
        });
    }

    // Queue-length monitor; also enforces the duration limit.
    std::vector<QueueSample> queueSamples;
    std::atomic<bool> monitorStop{false};
    bool hitLimit = false;
    std::thread monitor([&] {
        auto nextSample = Clock::now();
        while (!monitorStop.load()) {
            QueueSample qs;
            qs.tMs = ctx.nowMs();
            qs.perVertex.assign(static_cast<std::size_t>(n), 0);
            for (const auto& inst : ctx.instances)
                if (inst->in) qs.perVertex[static_cast<std::size_t>(inst->vertexIdx)] +=
                    inst->in->sizeApprox();
            queueSamples.push_back(std::move(qs));
            nextSample += std::chrono::milliseconds(options.queueSampleIntervalMs);
            while (!monitorStop.load() && Clock::now() < nextSample)
                std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
    });

    const std::int64_t limit = options.durationLimitMs;
    const std::int64_t graceMs = std::max<std::int64_t>(30000, limit);
    while (finished.load() < total) {
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
        if (limit > 0 && !ctx.stop.load() && ctx.nowMs() > static_cast<double>(limit)) {
            ctx.stop.store(true);
            hitLimit = true;
        }
        if (ctx.stop.load() && ctx.nowMs() > static_cast<double>((limit > 0 ? limit : 0) + graceMs))
            ctx.abortAll();
    }
    for (auto& t : threads) t.join();
    monitorStop.store(true);
    monitor.join();

    const double wallMs = ctx.nowMs();

    if (ctx.firstError) std::rethrow_exception(ctx.firstError);

    RunResult result;
    result.wallMs = wallMs;
    result.hitDurationLimit = hitLimit;
    result.queueSamples = std::move(queueSamples);
    result.log.sinkNames = sinkNames;
    for (const auto& v : spec.vertices) result.queueSampleVertices.push_back(v.name);

    std::uint64_t replayEmitted = 0, overruns = 0;
    double intendedSum = 0;
    for (const auto& inst : ctx.instances) {
        const auto& name = spec.vertices[inst->vertexIdx].name;
        auto& stats = result.taskStats[name];
        stats.in += inst->stats.in;
        stats.out += inst->stats.out;
        for (const auto& e : inst->srcEvents) result.log.sourceEvents.push_back(e);
        for (const auto& e : inst->sinkEvents) result.log.sinkEvents.push_back(e);
        if (inst->isSource && inst->shardStats.emitted) {
            replayEmitted += inst->shardStats.emitted;
            overruns += inst->shardStats.clockOverruns;
            intendedSum += inst->shardStats.intendedRate;
        }
    }
    std::sort(result.log.sourceEvents.begin(), result.log.sourceEvents.end(),
              [](const SourceEvent& a, const SourceEvent& b) { return a.emitMs < b.emitMs; });
    std::sort(result.log.sinkEvents.begin(), result.log.sinkEvents.end(),
              [](const SinkEvent& a, const SinkEvent& b) { return a.arriveMs < b.arriveMs; });

    result.replay.emitted = replayEmitted;
    result.replay.clockOverruns = overruns;
    if (!workload.records.empty()) {
        const double scaledSpanSec =
            (workload.nativeSpanMs / options.onlineTemporalFactor) / 1000.0;
        result.replay.intendedRate = scaledSpanSec > 0
                                         ? workload.records.size() / scaledSpanSec
                                         : static_cast<double>(workload.records.size());
    }
    if (!result.log.sourceEvents.empty()) {
        const double spanSec = result.log.sourceEvents.back().emitMs / 1000.0;
        result.replay.spanMs = result.log.sourceEvents.back().emitMs;
        result.replay.achievedRate =
            spanSec > 0 ? result.log.sourceEvents.size() / spanSec : 0;
    }

    // Metrics series over full intervals only; the trailing partial
    // interval would skew rate and jitter values.
    MetricsReport& report = result.report;
    report.runMeta.topology = spec.name;
    report.runMeta.workload = workload.name;
    report.runMeta.durationMs = wallMs;
    report.runMeta.intervalMs = options.metricsIntervalMs;
    const double sigma = options.selectivityOverride > 0 ? options.selectivityOverride
                                                         : declaredSelectivity(spec);
    report.runMeta.selectivity = sigma;

    report.latencies = latencyRows(result.log);
    {
        std::vector<double> lat;
        lat.reserve(report.latencies.size());
        for (const auto& r : report.latencies) lat.push_back(r.latencyMs);
        report.latencyStats = summarizeLatencies(lat);
    }

    const auto intervals =
        static_cast<std::size_t>(wallMs / static_cast<double>(options.metricsIntervalMs));
    if (intervals > 0) {
        report.throughputSeries = computeThroughput(result.log, options.metricsIntervalMs, intervals);
        report.inputRateSeries = computeInputRate(result.log, options.metricsIntervalMs, intervals);
        const double longTermInput =
            result.log.sourceEvents.empty() ? 0 : result.log.sourceEvents.size() / (wallMs / 1000.0);
        if (sigma * longTermInput > 0)
            report.jitterSeries =
                computeJitter(report.throughputSeries, report.inputRateSeries, sigma, longTermInput);
    }
    return result;
}

}  // namespace riot
