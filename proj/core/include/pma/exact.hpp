#pragma once

#include <cstdint>
#include <optional>

#include "pma/instance.hpp"

namespace pma {

enum class ExactStatus { Sat, Unsat, Timeout };

struct ExactLimits {
    double time_limit_s = 0.0;        // 0 = unlimited
    long long node_budget = 0;        // 0 = unlimited; nodes = placements tried
};

struct ExactResult {
    ExactStatus status = ExactStatus::Timeout;
    std::optional<Assignment> assignment;
    long long nodes_explored = 0;
};

/// Complete backtracking search: minimum-remaining-offsets message order,
/// ascending offsets, the root message pinned to offset 0 (rotation
/// symmetry). Sat results carry a validated assignment; Unsat is exhaustive
/// modulo that symmetry; Timeout makes no claim.
ExactResult exact_solve(const Instance& inst, const ExactLimits& limits = {});

struct UnsatSearchParams {
    int p_min = 2;
    int p_max = 12;
    int tau = 1;
    double target_load = 0.8;
    long long budget = 10000;         // instances to try
    std::uint64_t seed = 0;
    ExactLimits per_instance{0.0, 2'000'000};
    double load_slack = 0.02;         // accept |n*tau/P - target| <= slack
};

struct UnsatSearchResult {
    Instance instance;
    ExactResult proof;
    long long tried = 0;
};

/// Random search for an instance at (approximately) the target load that
/// exact_solve proves unsatisfiable. Returns nothing when the budget runs
/// out; that is no claim of nonexistence.
std::optional<UnsatSearchResult> search_unsat(const UnsatSearchParams& params);

}  // namespace pma
