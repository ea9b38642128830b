#pragma once

#include <optional>

#include "kswitch/errors.hpp"
#include "kswitch/matching.hpp"
#include "support/oracles.hpp"

namespace testing {

/// Code of the kswitch::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<kswitch::ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const kswitch::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline std::vector<oracle::EdgeSet> edge_sets(const std::vector<kswitch::Matching>& ms) {
    std::vector<oracle::EdgeSet> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m.edges());
    return out;
}

}  // namespace testing
