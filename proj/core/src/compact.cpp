#include "pma/compact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "meta_state.hpp"

namespace pma {

std::vector<SplitDelay> split_delays(const Instance& inst) {
    std::vector<SplitDelay> out;
    out.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i)
        out.push_back({i, inst.delays[i] / inst.msg_size, inst.delays[i] % inst.msg_size});
    std::stable_sort(out.begin(), out.end(), [](const SplitDelay& a, const SplitDelay& b) {
        return a.rem != b.rem ? a.rem < b.rem : a.msg < b.msg;
    });
    return out;
}

int gap(const SplitDelay& first, const SplitDelay& second, int m) {
    int g = (first.quot + 1 - second.quot) % m;
    if (g < 0) g += m;
    return g;
}

long long tuple_supply_bound(int k) {
    return k + static_cast<long long>(k) * (k - 1) * (2 * k - 1) / 6;
}

CompactTuple find_compact_pair(const std::vector<SplitDelay>& three, int m) {
    if (three.size() != 3) throw std::invalid_argument("find_compact_pair: need exactly three");
    auto make = [m](const SplitDelay& a, const SplitDelay& b) {
        return CompactTuple{{a, b}, {0, gap(a, b, m)}};
    };
    if (gap(three[0], three[1], m) != 0) return make(three[0], three[1]);
    if (gap(three[0], three[2], m) != 0) return make(three[0], three[2]);
    // Both failed, so quot[1] == quot[2] and (1,2) chains at gap 1.
    return make(three[1], three[2]);
}

namespace {

// Appends a candidate when the new meta delta stays distinct from all
// existing ones (gap 0 clashes with the last member itself).
std::optional<CompactTuple> try_append(const CompactTuple& c, const SplitDelay& cand, int m) {
    int delta = (c.meta_delta.back() + gap(c.members.back(), cand, m)) % m;
    for (int d : c.meta_delta)
        if (d == delta) return std::nullopt;
    CompactTuple ext = c;
    ext.members.push_back(cand);
    ext.meta_delta.push_back(delta);
    return ext;
}

// First quotient class holding at least k of the given positions; its k
// earliest members chain at gap 1.
std::optional<CompactTuple> same_quot_shortcut(const std::vector<SplitDelay>& pool, std::size_t lo,
                                               std::size_t hi, int k) {
    std::vector<std::pair<int, std::size_t>> by_quot;  // (quot, pos), pos ascending per class
    for (std::size_t p = lo; p < hi; ++p) by_quot.emplace_back(pool[p].quot, p);
    std::stable_sort(by_quot.begin(), by_quot.end());
    for (std::size_t s = 0; s + k <= by_quot.size(); ++s) {
        if (by_quot[s].first != by_quot[s + k - 1].first) continue;
        CompactTuple t;
        for (int l = 0; l < k; ++l) {
            t.members.push_back(pool[by_quot[s + l].second]);
            t.meta_delta.push_back(l);
        }
        return t;
    }
    return std::nullopt;
}

void require_aligned(const Instance& inst, const char* who) {
    if (inst.period % inst.msg_size != 0)
        throw std::invalid_argument(std::string(who) + ": requires tau | P (normalize first)");
}

GreedyOutcome success_outcome(const Instance& inst, const std::vector<int>& meta_of) {
    std::vector<int> offsets(inst.n());
    for (int i = 0; i < inst.n(); ++i) offsets[i] = meta_of[i] * inst.msg_size;
    GreedyOutcome out;
    out.scheduled_count = inst.n();
    out.assignment = Assignment{std::move(offsets)};
    return out;
}

// Schedules leftovers one by one in rem order; shared tail of the compact
// schedulers.
GreedyOutcome single_phase(const Instance& inst, detail::MetaState& st, std::vector<int>& meta_of,
                           const std::vector<SplitDelay>& rest) {
    for (std::size_t idx = 0; idx < rest.size(); ++idx) {
        int meta = st.find_single(rest[idx]);
        if (meta < 0) {
            GreedyOutcome out;
            out.scheduled_count = inst.n() - static_cast<int>(rest.size() - idx);
            out.failed_message = rest[idx].msg;
            return out;
        }
        st.commit(rest[idx], meta);
        meta_of[rest[idx].msg] = meta;
    }
    return success_outcome(inst, meta_of);
}

}  // namespace

std::optional<CompactTuple> find_compact_tuple(const std::vector<SplitDelay>& pool, int k, int m) {
    if (k < 1) throw std::invalid_argument("find_compact_tuple: k must be positive");
    if (k > m || static_cast<std::size_t>(k) > pool.size()) return std::nullopt;
    if (k == 1) return CompactTuple{{pool[0]}, {0}};

    std::optional<CompactTuple> base;
    std::size_t prefix = std::min<std::size_t>(pool.size(), tuple_supply_bound(k - 1));
    {
        std::vector<SplitDelay> head(pool.begin(), pool.begin() + prefix);
        base = find_compact_tuple(head, k - 1, m);
    }
    if (!base && prefix < pool.size()) base = find_compact_tuple(pool, k - 1, m);

    if (base) {
        std::size_t last_pos = 0;
        for (std::size_t p = 0; p < pool.size(); ++p)
            if (pool[p].msg == base->members.back().msg) last_pos = p;
        std::size_t window_end =
            std::min(pool.size(), last_pos + 1 + static_cast<std::size_t>(k - 1) * (k - 1) + 1);
        for (std::size_t p = last_pos + 1; p < window_end; ++p)
            if (auto ext = try_append(*base, pool[p], m)) return ext;
        if (auto t = same_quot_shortcut(pool, last_pos + 1, window_end, k)) return t;
        for (std::size_t p = window_end; p < pool.size(); ++p)
            if (auto ext = try_append(*base, pool[p], m)) return ext;
    }
    return same_quot_shortcut(pool, 0, pool.size(), k);
}

CompactPairDetail compact_pair_solve_detail(const Instance& inst) {
    require_aligned(inst, "compact_pair_solve");
    const int m = inst.period / inst.msg_size;
    auto splits = split_delays(inst);

    CompactPairDetail detail;
    std::vector<SplitDelay> pool = splits;
    detail.pairs = detail::build_pair_sequence(pool, m);

    detail::MetaState st(m);
    std::vector<int> meta_of(inst.n(), -1);
    for (const auto& pair : detail.pairs) {
        int base = st.find_chain_base(pair);
        if (base < 0) break;  // stop pairing at the first blocked pair
        st.commit_chain(pair, base, meta_of);
        ++detail.pairs_scheduled;
    }

    // Everything not scheduled (unpaired leftovers plus dissolved pairs)
    // falls back to meta-offset order.
    std::vector<SplitDelay> rest;
    for (const auto& s : splits)
        if (meta_of[s.msg] < 0) rest.push_back(s);
    detail.outcome = single_phase(inst, st, meta_of, rest);
    return detail;
}

GreedyOutcome compact_pair_solve(const Instance& inst) {
    return compact_pair_solve_detail(inst).outcome;
}

GreedyOutcome compact_k_tuples_solve(const Instance& inst, int k) {
    if (k < 1) throw std::invalid_argument("compact_k_tuples_solve: k must be >= 1");
    if (k == 1) return meta_offset(inst);
    require_aligned(inst, "compact_k_tuples_solve");
    const int m = inst.period / inst.msg_size;

    std::vector<SplitDelay> pool = split_delays(inst);
    detail::MetaState st(m);
    std::vector<int> meta_of(inst.n(), -1);

    for (int arity = std::min(k, m); arity >= 2; --arity) {
        while (true) {
            auto tup = find_compact_tuple(pool, arity, m);
            if (!tup) break;
            int base = st.find_chain_base(*tup);
            if (base < 0) break;  // phase over; members stay pooled
            st.commit_chain(*tup, base, meta_of);
            auto in_tuple = [&](const SplitDelay& s) {
                for (const auto& mem : tup->members)
                    if (mem.msg == s.msg) return true;
                return false;
            };
            pool.erase(std::remove_if(pool.begin(), pool.end(), in_tuple), pool.end());
        }
    }
    return single_phase(inst, st, meta_of, pool);
}

GreedyOutcome compact_fit(const Instance& inst) {
    require_aligned(inst, "compact_fit");
    const int m = inst.period / inst.msg_size;
    auto splits = split_delays(inst);

    detail::MetaState st(m);
    std::vector<int> meta_of(inst.n(), -1);
    for (std::size_t idx = 0; idx < splits.size(); ++idx) {
        int meta = st.find_single_snug(splits[idx]);
        if (meta < 0) meta = st.find_single(splits[idx]);
        if (meta < 0) {
            GreedyOutcome out;
            out.scheduled_count = static_cast<int>(idx);
            out.failed_message = splits[idx].msg;
            return out;
        }
        st.commit(splits[idx], meta);
        meta_of[splits[idx].msg] = meta;
    }
    return success_outcome(inst, meta_of);
}

}  // namespace pma
