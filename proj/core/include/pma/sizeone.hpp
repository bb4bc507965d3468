#pragma once

#include <cstdint>
#include <functional>

#include "pma/greedy.hpp"
#include "pma/partial.hpp"

namespace pma {

/// Potential bookkeeping for tau = 1. The potential of a delay d counts slots
/// p used in the first period whose image p + d is used in the second; each
/// such coincidence recovers one otherwise-lost offset, giving the identity
/// |available offsets| = P - 2s + potential. The potential of a position p
/// counts messages whose image of p is used. All counters update
/// incrementally in O(distinct delays) per mutation.
class PotentialState {
  public:
    explicit PotentialState(const Instance& inst);

    const Instance& instance() const { return *inst_; }
    const PartialAssignment& partial() const { return partial_; }

    /// Potential of delay value d. O(1) for delays the instance contains
    /// (tracked incrementally); recomputed on the fly otherwise.
    int potential_of_delay(int d) const;
    int message_potential(int msg) const { return delay_potential_[inst_->delays[msg]]; }
    long long position_potential(int p) const { return pos_potential_[p]; }
    /// Pot(A): summed over every message of the instance; equals the sum of
    /// position potentials over used first-period slots.
    long long total() const { return total_; }

    void schedule(int msg, int offset);
    void unschedule(int msg);
    /// Evicts the owner of slot (offset + d_msg) in the second period and
    /// schedules msg at `offset`; second-period occupancy is unchanged.
    /// Returns the evicted message.
    int swap(int msg, int offset);

    /// Invoked after every mutation (used by the invariant checks).
    std::function<void(const PotentialState&)> observer;

  private:
    void occ1_changed(int slot, int sign);
    void occ2_changed(int slot, int sign);
    void notify() { if (observer) observer(*this); }

    const Instance* inst_;
    PartialAssignment partial_;
    std::vector<int> delay_count_;       // messages per delay value (static)
    std::vector<int> distinct_delays_;   // delay values with count > 0
    std::vector<int> delay_potential_;   // potential per delay value
    std::vector<long long> pos_potential_;
    long long total_ = 0;
};

/// Potential of a hypothetical message of delay d against a partial
/// assignment, from scratch. tau = 1 only.
int message_potential(const PartialAssignment& partial, int d);

/// First Fit, then potential-increasing swaps, then scheduling the blocked
/// message by relocating at most two scheduled ones; repeats until done or
/// stuck. tau = 1 only; succeeds whenever load <= 1/2 + (sqrt(5)/2 - 1).
GreedyOutcome swap_and_move(const Instance& inst,
                            std::function<void(const PotentialState&)> observer = {});

/// Schedules in input order at the available offset maximizing the summed
/// potential of the still-unscheduled messages (ties: smallest offset).
/// tau = 1 only.
GreedyOutcome greedy_potential(const Instance& inst);

/// Schedules in input order at an available offset drawn uniformly at
/// random; deterministic for a fixed seed. Any tau.
GreedyOutcome greedy_uniform(const Instance& inst, std::uint64_t seed);

/// Probability that greedy_uniform succeeds on a random instance with unit
/// messages, n of them in period m, under the uniform-trace analysis:
/// product over steps of (1 - C(i-1, 2(i-1)-m) / C(m, i-1)). Exact binomials,
/// converted to double at the end.
double success_probability(int m, int n);

}  // namespace pma
