#include "pma/solvers.hpp"

#include "pma/compact.hpp"
#include "pma/greedy.hpp"
#include "pma/reductions.hpp"
#include "pma/sizeone.hpp"

namespace pma {

const std::vector<Algo>& all_algos() {
    static const std::vector<Algo> algos = {
        Algo::FirstFit,      Algo::MetaOffset,      Algo::CompactPair,
        Algo::CompactK,      Algo::CompactFit,      Algo::GreedyUniform,
        Algo::GreedyPotential, Algo::SwapAndMove,   Algo::Exact,
    };
    return algos;
}

std::string to_string(Algo a) {
    switch (a) {
        case Algo::FirstFit: return "first-fit";
        case Algo::MetaOffset: return "meta-offset";
        case Algo::CompactPair: return "compact-pair";
        case Algo::CompactK: return "compact-k";
        case Algo::CompactFit: return "compact-fit";
        case Algo::GreedyUniform: return "greedy-uniform";
        case Algo::GreedyPotential: return "greedy-potential";
        case Algo::SwapAndMove: return "swap-and-move";
        case Algo::Exact: return "exact";
    }
    return "?";
}

std::optional<Algo> algo_from_string(const std::string& name) {
    for (Algo a : all_algos())
        if (to_string(a) == name) return a;
    return std::nullopt;
}

namespace {

SolveResult from_outcome(const GreedyOutcome& out) {
    SolveResult r;
    r.scheduled_count = out.scheduled_count;
    if (out.success()) {
        r.status = SolveStatus::Sat;
        r.assignment = out.assignment;
    } else {
        r.status = SolveStatus::Fail;
    }
    return r;
}

}  // namespace

SolveResult solve_with(Algo algo, const Instance& inst, const SolveOptions& opts) {
    switch (algo) {
        case Algo::FirstFit: return from_outcome(first_fit(inst));
        case Algo::MetaOffset: return from_outcome(meta_offset(inst));
        case Algo::CompactPair: return from_outcome(compact_pair_solve(inst));
        case Algo::CompactK: return from_outcome(compact_k_tuples_solve(inst, opts.k));
        case Algo::CompactFit: return from_outcome(compact_fit(inst));
        case Algo::GreedyUniform: return from_outcome(greedy_uniform(inst, opts.seed));
        case Algo::GreedyPotential: return from_outcome(greedy_potential(inst));
        case Algo::SwapAndMove: return from_outcome(swap_and_move(inst));
        case Algo::Exact: {
            ExactResult res = exact_solve(inst, opts.exact_limits);
            SolveResult r;
            r.nodes = res.nodes_explored;
            switch (res.status) {
                case ExactStatus::Sat:
                    r.status = SolveStatus::Sat;
                    r.assignment = res.assignment;
                    r.scheduled_count = inst.n();
                    break;
                case ExactStatus::Unsat: r.status = SolveStatus::Unsat; break;
                case ExactStatus::Timeout: r.status = SolveStatus::Timeout; break;
            }
            return r;
        }
    }
    throw std::invalid_argument("solve_with: unknown algorithm");
}

}  // namespace pma
