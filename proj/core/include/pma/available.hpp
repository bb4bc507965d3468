#pragma once

#include <optional>
#include <vector>

#include "pma/partial.hpp"

namespace pma {

/// Half-open run of offsets [start, start + len), not wrapping.
struct Segment {
    int start = 0;
    int len = 0;
};

/// Sorted, disjoint runs of non-colliding offsets for one candidate delay.
/// Built from the scheduled messages in O(s log s); never touches the
/// occupancy tables, so it stays cheap when P is large.
class FreeOffsets {
  public:
    const std::vector<Segment>& segments() const { return segs_; }
    long long count() const { return total_; }
    bool empty() const { return total_ == 0; }

    /// Smallest free offset.
    std::optional<int> first() const;
    /// k-th free offset in increasing order, k in [0, count()).
    int kth(long long k) const;
    /// Smallest free offset that is a multiple of step (candidates
    /// step * {0, 1, ..., limit-1}).
    std::optional<int> first_multiple(int step, int limit) const;
    /// All free offsets, ascending.
    std::vector<int> materialize() const;

    /// Free offsets for a message of delay d against the given placements.
    static FreeOffsets compute(int period, int tau,
                               const std::vector<std::pair<int, int>>& placed, int d);

  private:
    std::vector<Segment> segs_;
    long long total_ = 0;
};

/// Offsets o such that extending `partial` by a message of delay d at o
/// creates no collision. Ascending.
std::vector<int> available_offsets(const Instance& inst, const PartialAssignment& partial, int d);

}  // namespace pma
