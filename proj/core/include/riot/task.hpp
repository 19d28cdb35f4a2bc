#ifndef RIOT_TASK_HPP
#define RIOT_TASK_HPP

#include <functional>
#include <memory>

#include "riot/message.hpp"

namespace riot {

/// Receives task output. The engine owns id assignment and causal-id
/// propagation; tasks only fill domain content.
class Emitter {
public:
    virtual ~Emitter() = default;
    virtual void emit(Message msg) = 0;
};

/// User logic plugged into a dataflow vertex. One instance is owned by
/// exactly one worker, so implementations need no internal locking.
class TaskLogic {
public:
    virtual ~TaskLogic() = default;
    virtual void process(const Message& in, Emitter& out) = 0;
    /// Called once after the last upstream message. Tumbling windows do
    /// not emit their partial remainder here; tasks override only when
    /// they have genuinely deliverable end-of-stream output.
    virtual void flush(Emitter& /*out*/) {}
};

/// Builds a fresh logic object for task instance `instanceIndex`.
/// Instances constructed by the same factory must be independent.
using TaskFactory = std::function<std::unique_ptr<TaskLogic>(int instanceIndex)>;

}  // namespace riot

#endif
