#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pma/rational.hpp"

namespace pma {

/// A problem instance: n periodic messages of size tau must each pick an
/// offset in [0, P) so that no two messages overlap at either of the two
/// contention points. A message entering the first point at slot t occupies
/// [t, t+tau) there and [t+d, t+d+tau) at the second point, cyclically.
struct Instance {
    int period = 1;             // P, slots per period
    int msg_size = 1;           // tau
    std::vector<int> delays;    // d_i, stored reduced mod P

    Instance() = default;
    Instance(int period_, int msg_size_, std::vector<int> delays_);

    int n() const { return static_cast<int>(delays.size()); }

    /// n * tau / P, exact.
    Rational load() const { return Rational(static_cast<std::int64_t>(n()) * msg_size, period); }
};

/// A total offset map; a candidate solution.
struct Assignment {
    std::vector<int> offsets;
};

/// The slots message i occupies in the first and second period when placed
/// at offset o.
std::pair<std::vector<int>, std::vector<int>> windows(const Instance& inst, int i, int o);

/// Occupied-slot sets of a (valid) assignment, one per period. The sufficient
/// statistic for the randomized analysis of uniform greedy.
struct Trace {
    std::vector<int> used1;  // sorted
    std::vector<int> used2;  // sorted
    bool operator==(const Trace&) const = default;
};

Trace trace_of(const Instance& inst, const Assignment& a);

}  // namespace pma
