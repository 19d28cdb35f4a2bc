#include "riot/errors.hpp"

namespace riot {

const char* errName(Err e) {
    switch (e) {
        case Err::CycleWithoutSource: return "CycleWithoutSource";
        case Err::DanglingEdge: return "DanglingEdge";
        case Err::HashFieldUnknown: return "HashFieldUnknown";
        case Err::StatefulParallelWithoutHash: return "StatefulParallelWithoutHash";
        case Err::NotConnected: return "NotConnected";
        case Err::EmptyTopology: return "EmptyTopology";
        case Err::DuplicateVertexName: return "DuplicateVertexName";
        case Err::MissingHashField: return "MissingHashField";
        case Err::TaskPanicked: return "TaskPanicked";
        case Err::QueueOverflowPolicyViolated: return "QueueOverflowPolicyViolated";
        case Err::SchemaMismatch: return "SchemaMismatch";
        case Err::EmptyFile: return "EmptyFile";
        case Err::InsufficientSpan: return "InsufficientSpan";
        case Err::OrphanSinkEvent: return "OrphanSinkEvent";
        case Err::DivisionGuard: return "DivisionGuard";
        case Err::SamplerUnavailable: return "SamplerUnavailable";
        case Err::NeverStable: return "NeverStable";
        case Err::IoFailure: return "IoFailure";
        case Err::MalformedSenml: return "MalformedSenml";
        case Err::MalformedXml: return "MalformedXml";
        case Err::MissingField: return "MissingField";
        case Err::NonNumericField: return "NonNumericField";
        case Err::SingularDesignMatrix: return "SingularDesignMatrix";
        case Err::EmptyBatch: return "EmptyBatch";
        case Err::BlobNotFound: return "BlobNotFound";
        case Err::RowNotFound: return "RowNotFound";
        case Err::TopicClosed: return "TopicClosed";
        case Err::FileMissing: return "FileMissing";
        case Err::DestinationUnwritable: return "DestinationUnwritable";
        case Err::UnknownTask: return "UnknownTask";
        case Err::ConfigIncomplete: return "ConfigIncomplete";
        case Err::RateUnknown: return "RateUnknown";
        case Err::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

}  // namespace riot
