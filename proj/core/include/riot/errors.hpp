#ifndef RIOT_ERRORS_HPP
#define RIOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riot {

enum class Err {
    // topology validation
    CycleWithoutSource,
    DanglingEdge,
    HashFieldUnknown,
    StatefulParallelWithoutHash,
    NotConnected,
    EmptyTopology,
    DuplicateVertexName,
    // runtime
    MissingHashField,
    TaskPanicked,
    QueueOverflowPolicyViolated,
    // workload
    SchemaMismatch,
    EmptyFile,
    InsufficientSpan,
    // metrics
    OrphanSinkEvent,
    DivisionGuard,
    SamplerUnavailable,
    NeverStable,
    IoFailure,
    // tasks
    MalformedSenml,
    MalformedXml,
    MissingField,
    NonNumericField,
    SingularDesignMatrix,
    EmptyBatch,
    // services
    BlobNotFound,
    RowNotFound,
    TopicClosed,
    FileMissing,
    DestinationUnwritable,
    // apps / cli
    UnknownTask,
    ConfigIncomplete,
    RateUnknown,
    BadConfig,
};

const char* errName(Err e);

class RiotError : public std::runtime_error {
public:
    RiotError(Err code, std::string detail)
        : std::runtime_error(std::string(errName(code)) + ": " + detail), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, std::string detail) {
    throw RiotError(code, std::move(detail));
}

}  // namespace riot

#endif
