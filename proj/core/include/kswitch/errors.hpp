#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kswitch {

enum class ErrorCode {
    InvalidArgument,
    VertexOutOfRange,
    GraphTooLarge,
    SelfLoop,
    NonCrossingEdge,
    UnbalancedBipartition,
    OreBipOnNonBipartite,
    DivisibilityViolation,
    OddVertexCount,
    InfeasibleDegree,
    InvalidMatching,
    EnumerationBudgetExceeded,
    NoAugmentingEdge,
    NoMoveFound,
    PatternNotFound,
    InvalidStep,
    CaseLadderStuck,
    OmegaTooLarge,
    NoPerfectMatching,
    ConfigError,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kswitch
