#include "kswitch/errors.hpp"

namespace kswitch {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::GraphTooLarge: return "GraphTooLarge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::NonCrossingEdge: return "NonCrossingEdge";
        case ErrorCode::UnbalancedBipartition: return "UnbalancedBipartition";
        case ErrorCode::OreBipOnNonBipartite: return "OreBipOnNonBipartite";
        case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorCode::OddVertexCount: return "OddVertexCount";
        case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
        case ErrorCode::InvalidMatching: return "InvalidMatching";
        case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorCode::NoAugmentingEdge: return "NoAugmentingEdge";
        case ErrorCode::NoMoveFound: return "NoMoveFound";
        case ErrorCode::PatternNotFound: return "PatternNotFound";
        case ErrorCode::InvalidStep: return "InvalidStep";
        case ErrorCode::CaseLadderStuck: return "CaseLadderStuck";
        case ErrorCode::OmegaTooLarge: return "OmegaTooLarge";
        case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace kswitch
