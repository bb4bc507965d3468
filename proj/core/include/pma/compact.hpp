#pragma once

#include <optional>
#include <vector>

#include "pma/greedy.hpp"
#include "pma/rational.hpp"

namespace pma {

/// Euclidean split of a delay: d = quot * tau + rem, 0 <= rem < tau.
struct SplitDelay {
    int msg = 0;
    int quot = 0;
    int rem = 0;
};

/// Splits of all delays, sorted by (rem, msg). The compact schedulers process
/// messages in this order.
std::vector<SplitDelay> split_delays(const Instance& inst);

/// Meta-offset distance realizing the chaining of (i, j) with rem_i <= rem_j:
/// (quot_i + 1 - quot_j) mod m. The pair is compactible iff nonzero.
int gap(const SplitDelay& first, const SplitDelay& second, int m);

/// A chain of messages whose second-period windows sit in consecutive
/// meta-blocks. member l is placed at base + meta_delta[l] (mod m).
struct CompactTuple {
    std::vector<SplitDelay> members;    // rem-ascending
    std::vector<int> meta_delta;        // pairwise distinct, meta_delta[0] == 0
    int arity() const { return static_cast<int>(members.size()); }
};

/// Messages a pool must hold so that a compact k-tuple is guaranteed to exist:
/// k + k(k-1)(2k-1)/6.
long long tuple_supply_bound(int k);

/// Picks a compact pair out of exactly three rem-sorted splits. Existence is
/// guaranteed: if neither (0,1) nor (0,2) is compactible, then 1 and 2 share a
/// quotient and chain at gap 1.
CompactTuple find_compact_pair(const std::vector<SplitDelay>& three, int m);

/// Best-effort compact k-tuple from a rem-sorted pool. Follows the inductive
/// construction (prefix-restricted (k-1)-tuple, then a bounded candidate
/// window, then a same-quotient class), widening greedily when the pool is
/// smaller than the guarantee bound. Empty only when no extension exists.
std::optional<CompactTuple> find_compact_tuple(const std::vector<SplitDelay>& pool, int k, int m);

/// Pair phase + meta-offset fallback. Requires tau | P. Succeeds whenever
/// load <= 3/8.
GreedyOutcome compact_pair_solve(const Instance& inst);

/// Same run with the built pair sequence and the number of pairs that went
/// in as chains before the phase stopped.
struct CompactPairDetail {
    GreedyOutcome outcome;
    std::vector<CompactTuple> pairs;
    int pairs_scheduled = 0;
};
CompactPairDetail compact_pair_solve_detail(const Instance& inst);

/// Descending-arity tuple phases, k down to 1. Requires tau | P (k == 1
/// degenerates to meta_offset). With k = 8, succeeds at load < 4/10 once
/// n >= 220.
GreedyOutcome compact_k_tuples_solve(const Instance& inst, int k);

/// Rem-sorted one-pass scheduler: prefer a meta-offset whose predecessor
/// collides in the second period (extending a compact tuple), else the
/// smallest free one. Requires tau | P.
GreedyOutcome compact_fit(const Instance& inst);

/// Worst-case guarantee table for compact_k_tuples_solve, derived from the
/// forbidden-meta-offset recurrences.
struct BoundTable {
    int k = 1;
    std::vector<Rational> tuple_counts;  // index 0 -> arity k, ..., last -> arity 1 (fractions of m)
    Rational capacity;                   // guaranteed scheduled messages, fraction of m
    Rational guaranteed_load;            // largest grid load <= capacity
    long long min_n = 1;                 // message count needed by the tuple-supply argument
};

/// Default grid: all fractions p/q with 1 <= p <= q <= 10.
std::vector<Rational> default_load_grid();

BoundTable bound_table(int k, const std::vector<Rational>& load_grid = default_load_grid());

}  // namespace pma
