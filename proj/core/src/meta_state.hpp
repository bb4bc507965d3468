#pragma once

// Internal: meta-granularity scheduling state shared by the compact
// schedulers (requires tau | P).
//
// With all offsets tau-aligned, first-period collisions are exactly equal
// meta-offsets. In the second period a scheduled window is
// (B_j * tau + r_j, length tau); a candidate with split (q, r) placed at
// meta M collides iff
//   M + q == B_j,  or
//   M + q == B_j + 1 and r <  r_j,  or
//   M + q == B_j - 1 and r >  r_j      (all mod m),
// so each scheduled message forbids at most three meta-offsets.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pma/compact.hpp"

namespace pma::detail {

class MetaState {
  public:
    explicit MetaState(int m) : m_(m), used_(m, 0), mark_(m, 0) {}

    int m() const { return m_; }
    bool meta_used(int meta) const { return used_[meta] != 0; }

    void commit(const SplitDelay& s, int meta) {
        used_[meta] = 1;
        entries_.push_back({(meta + s.quot) % m_, s.rem});
    }

    // Smallest base meta-offset where the whole chain fits, or -1.
    int find_chain_base(const CompactTuple& tup) {
        // A chain covering every meta-block wraps its tail into its own head;
        // then the last rem must not exceed the first.
        if (tup.arity() == m_ && tup.members.back().rem > tup.members.front().rem) return -1;
        new_marks();
        for (int l = 0; l < tup.arity(); ++l) mark_period2(tup.members[l], tup.meta_delta[l]);
        for (int base = 0; base < m_; ++base) {
            if (marked(base)) continue;
            bool ok = true;
            for (int l = 0; l < tup.arity() && ok; ++l)
                if (used_[(base + tup.meta_delta[l]) % m_]) ok = false;
            if (ok) return base;
        }
        return -1;
    }

    void commit_chain(const CompactTuple& tup, int base, std::vector<int>& meta_of) {
        for (int l = 0; l < tup.arity(); ++l) {
            int meta = (base + tup.meta_delta[l]) % m_;
            commit(tup.members[l], meta);
            meta_of[tup.members[l].msg] = meta;
        }
    }

    // Smallest free meta-offset for a single message, or -1.
    int find_single(const SplitDelay& s) {
        new_marks();
        mark_period2(s, 0);
        for (int meta = 0; meta < m_; ++meta)
            if (!used_[meta] && !marked(meta)) return meta;
        return -1;
    }

    // Smallest meta-offset that is free and whose predecessor collides in the
    // second period (the placement extends a compact tuple), or -1.
    int find_single_snug(const SplitDelay& s) {
        new_marks();
        mark_period2(s, 0);
        for (int meta = 0; meta < m_; ++meta) {
            if (used_[meta] || marked(meta)) continue;
            if (marked((meta + m_ - 1) % m_)) return meta;
        }
        return -1;
    }

  private:
    struct Entry {
        int block;
        int rem;
    };

    void new_marks() { ++gen_; }
    bool marked(int meta) const { return mark_[meta] == gen_; }
    void mark(int v) {
        if (v < 0) v += m_;
        mark_[v] = gen_;
    }
    void mark_period2(const SplitDelay& s, int shift) {
        for (const auto& e : entries_) {
            mark((e.block - s.quot - shift) % m_);
            if (s.rem < e.rem) mark((e.block + 1 - s.quot - shift) % m_);
            if (s.rem > e.rem) mark((e.block - 1 - s.quot - shift) % m_);
        }
    }

    int m_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t gen_ = 0;
    std::vector<Entry> entries_;
};

// Pair sequence built by resolving the first three remaining messages at a
// time; a trailing twosome still pairs when its gap is nonzero. Consumed
// messages are erased from `pool`; leftovers stay.
inline std::vector<CompactTuple> build_pair_sequence(std::vector<SplitDelay>& pool, int m) {
    std::vector<CompactTuple> pairs;
    while (pool.size() >= 3) {
        std::vector<SplitDelay> three(pool.begin(), pool.begin() + 3);
        CompactTuple pair = find_compact_pair(three, m);
        pairs.push_back(pair);
        auto used = [&](const SplitDelay& s) {
            return s.msg == pair.members[0].msg || s.msg == pair.members[1].msg;
        };
        pool.erase(std::remove_if(pool.begin(), pool.begin() + 3, used), pool.begin() + 3);
    }
    if (pool.size() == 2 && gap(pool[0], pool[1], m) != 0) {
        pairs.push_back(CompactTuple{{pool[0], pool[1]}, {0, gap(pool[0], pool[1], m)}});
        pool.clear();
    }
    return pairs;
}

}  // namespace pma::detail
