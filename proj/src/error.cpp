#include "rainbow/error.hpp"

namespace rainbow {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ImproperColoring: return "ImproperColoring";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonAbelianGroup: return "NonAbelianGroup";
        case ErrorCode::EmptyConnectionSet: return "EmptyConnectionSet";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::BadGroupTable: return "BadGroupTable";
        case ErrorCode::TooLargeForExact: return "TooLargeForExact";
        case ErrorCode::DegenerateGraph: return "DegenerateGraph";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::CombinatorialBlowup: return "CombinatorialBlowup";
        case ErrorCode::InvalidOverride: return "InvalidOverride";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace rainbow
