#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pma/exact.hpp"
#include "pma/instance.hpp"

namespace pma {

enum class Algo {
    FirstFit,
    MetaOffset,
    CompactPair,
    CompactK,
    CompactFit,
    GreedyUniform,
    GreedyPotential,
    SwapAndMove,
    Exact,
};

const std::vector<Algo>& all_algos();
std::string to_string(Algo a);
std::optional<Algo> algo_from_string(const std::string& name);

struct SolveOptions {
    std::uint64_t seed = 0;   // greedy-uniform
    int k = 8;                // compact-k
    ExactLimits exact_limits{};
};

enum class SolveStatus { Sat, Fail, Unsat, Timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::Fail;
    std::optional<Assignment> assignment;
    int scheduled_count = 0;
    long long nodes = 0;  // exact only
};

/// Uniform front door over every scheduler. Heuristic failure is Fail (no
/// unsatisfiability claim); only the exact solver reports Unsat/Timeout.
SolveResult solve_with(Algo algo, const Instance& inst, const SolveOptions& opts = {});

}  // namespace pma
