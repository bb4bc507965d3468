#include "pma/exact.hpp"

#include <chrono>

#include "pma/partial.hpp"
#include "pma/rng.hpp"

namespace pma {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const Instance& inst;
    PartialAssignment partial;
    long long nodes = 0;
    long long node_budget;
    Clock::time_point deadline;
    bool has_deadline;
    bool out_of_budget = false;

    explicit Search(const Instance& i, const ExactLimits& lim)
        : inst(i), partial(i), node_budget(lim.node_budget) {
        has_deadline = lim.time_limit_s > 0;
        if (has_deadline)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(lim.time_limit_s));
    }

    bool budget_tripped() {
        if (node_budget > 0 && nodes >= node_budget) return true;
        if (has_deadline && (nodes & 0xfff) == 0 && Clock::now() >= deadline) return true;
        return false;
    }

    int count_available(int msg) const {
        int cnt = 0;
        for (int o = 0; o < inst.period; ++o)
            if (partial.can_place(msg, o)) ++cnt;
        return cnt;
    }

    // Fewest-available-offsets message, or -1 when all are scheduled.
    int pick_message() const {
        int best = -1, best_cnt = inst.period + 1;
        for (int i = 0; i < inst.n(); ++i) {
            if (partial.scheduled(i)) continue;
            int cnt = count_available(i);
            if (cnt < best_cnt) {
                best = i;
                best_cnt = cnt;
            }
        }
        return best;
    }

    bool dfs(bool root) {
        const int msg = pick_message();
        if (msg < 0) return true;
        const int limit = root ? 1 : inst.period;  // root pinned at offset 0
        for (int o = 0; o < limit; ++o) {
            if (!partial.can_place(msg, o)) continue;
            if (out_of_budget || budget_tripped()) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            partial.place(msg, o);
            if (dfs(false)) return true;
            partial.remove(msg);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ExactResult exact_solve(const Instance& inst, const ExactLimits& limits) {
    ExactResult res;
    if (inst.load() > Rational(1)) {  // pigeonhole: more used slots than slots
        res.status = ExactStatus::Unsat;
        return res;
    }
    if (inst.n() == 0) {
        res.status = ExactStatus::Sat;
        res.assignment = Assignment{};
        return res;
    }
    Search search(inst, limits);
    const bool found = search.dfs(true);
    res.nodes_explored = search.nodes;
    if (found) {
        res.status = ExactStatus::Sat;
        res.assignment = search.partial.to_assignment();
    } else if (search.out_of_budget) {
        res.status = ExactStatus::Timeout;
    } else {
        res.status = ExactStatus::Unsat;
    }
    return res;
}

std::optional<UnsatSearchResult> search_unsat(const UnsatSearchParams& params) {
    SplitMix64 rng(hash_values(params.seed, {0x756e736174ULL}));
    for (long long t = 0; t < params.budget; ++t) {
        const int P = params.p_min +
                      static_cast<int>(rng.bounded(params.p_max - params.p_min + 1));
        if (P < params.tau) continue;
        const auto n = static_cast<int>(
            params.target_load * P / params.tau + 0.5);
        if (n < 1) continue;
        const double load = static_cast<double>(n) * params.tau / P;
        if (load < params.target_load - params.load_slack ||
            load > params.target_load + params.load_slack) {
            if (params.target_load <= 1.0) continue;  // above 1, any overfull instance works
        }
        std::vector<int> delays(n);
        for (auto& d : delays) d = static_cast<int>(rng.bounded(P));
        Instance inst(P, params.tau, std::move(delays));
        ExactResult proof = exact_solve(inst, params.per_instance);
        if (proof.status == ExactStatus::Unsat)
            return UnsatSearchResult{std::move(inst), std::move(proof), t + 1};
    }
    return std::nullopt;
}

}  // namespace pma
