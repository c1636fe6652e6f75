#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    ImproperColoring,
    EmptyInput,
    InvalidArgument,
    NonAbelianGroup,
    EmptyConnectionSet,
    EmptySet,
    BadGroupTable,
    TooLargeForExact,
    DegenerateGraph,
    BudgetExhausted,
    TooLarge,
    CombinatorialBlowup,
    InvalidOverride,
    HypothesisViolated,
    VerificationFailed,
    FormatError,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace rainbow
