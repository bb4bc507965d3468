#pragma once

#include <vector>

#include "pma/instance.hpp"

namespace pma {

/// Working state of the incremental algorithms: a collision-free offset map
/// for a subset of messages plus per-period occupancy tables. Each occupied
/// slot records the owning message index, so collision lookups and evictions
/// are O(1).
class PartialAssignment {
  public:
    static constexpr int kFree = -1;

    explicit PartialAssignment(const Instance& inst);

    const Instance& instance() const { return *inst_; }
    int size() const { return scheduled_count_; }
    bool scheduled(int i) const { return offsets_[i] != kFree; }
    int offset_of(int i) const { return offsets_[i]; }

    /// Owner of a slot, or kFree.
    int occ1(int slot) const { return occ1_[slot]; }
    int occ2(int slot) const { return occ2_[slot]; }

    /// True iff placing message i at offset o collides with nothing scheduled.
    bool can_place(int i, int o) const;

    /// Place message i at offset o; throws if already scheduled or colliding.
    void place(int i, int o);

    /// Unschedule message i; throws if not scheduled.
    void remove(int i);

    /// All scheduled (offset, delay) pairs, in message order.
    std::vector<std::pair<int, int>> placed() const;

    /// Total assignment; throws unless every message is scheduled.
    Assignment to_assignment() const;

  private:
    const Instance* inst_;
    std::vector<int> offsets_;
    std::vector<int> occ1_, occ2_;
    int scheduled_count_ = 0;
};

}  // namespace pma
