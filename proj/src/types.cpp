#include "aztec/types.hpp"

namespace aztec {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonClosing: return "NonClosing";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::NotHorizontalSide: return "NotHorizontalSide";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotGridB: return "NotGridB";
    case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadVertexSelection: return "BadVertexSelection";
    case ErrorCode::ConditionsViolated: return "ConditionsViolated";
    case ErrorCode::NonIntegerTau: return "NonIntegerTau";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::BadProbePoint: return "BadProbePoint";
    case ErrorCode::CountTooLarge: return "CountTooLarge";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    }
    return "Unknown";
}

} // namespace aztec
