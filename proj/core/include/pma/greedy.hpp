#pragma once

#include <optional>

#include "pma/instance.hpp"

namespace pma {

/// Result of an incremental scheduler. `assignment` is present exactly when
/// every message was scheduled; otherwise `failed_message` names the first
/// message that had no usable offset.
struct GreedyOutcome {
    std::optional<Assignment> assignment;
    int scheduled_count = 0;
    std::optional<int> failed_message;

    bool success() const { return assignment.has_value(); }
};

/// Schedules messages in input order, each at the smallest offset that does
/// not collide with the current partial assignment. Always succeeds when
/// n*tau/P < 1/3.
GreedyOutcome first_fit(const Instance& inst);

/// Like first_fit but offsets restricted to multiples of tau
/// (tau * {0, ..., floor(P/tau) - 1}), which rules out first-period
/// collisions by alignment. Succeeds at load < 1/3 whenever tau divides P.
GreedyOutcome meta_offset(const Instance& inst);

}  // namespace pma
