#include "pma/sizeone.hpp"

#include <algorithm>
#include <stdexcept>

#include "pma/available.hpp"
#include "pma/bigint.hpp"
#include "pma/rng.hpp"

namespace pma {

namespace {

void require_unit(const Instance& inst, const char* who) {
    if (inst.msg_size != 1) throw std::invalid_argument(std::string(who) + ": requires tau = 1");
}

}  // namespace

int PotentialState::potential_of_delay(int d) const {
    if (d < 0 || d >= inst_->period)
        throw std::invalid_argument("potential_of_delay: bad delay");
    if (delay_count_[d] > 0) return delay_potential_[d];
    return pma::message_potential(partial_, d);
}

PotentialState::PotentialState(const Instance& inst)
    : inst_(&inst),
      partial_(inst),
      delay_count_(inst.period, 0),
      delay_potential_(inst.period, 0),
      pos_potential_(inst.period, 0) {
    require_unit(inst, "PotentialState");
    for (int d : inst.delays) {
        if (delay_count_[d] == 0) distinct_delays_.push_back(d);
        ++delay_count_[d];
    }
}

// Adding a message touches one slot per period (tau = 1). Counter deltas are
// evaluated against the pre-mutation tables, with explicit corrections for
// the slot being added alongside: the pair (offset, offset + d_msg) must be
// counted exactly once.
void PotentialState::schedule(int msg, int offset) {
    const int P = inst_->period;
    const int s2 = (offset + inst_->delays[msg]) % P;

    for (int d : distinct_delays_)  // pairs (offset, offset + d) against old occ2
        if (partial_.occ2((offset + d) % P) != PartialAssignment::kFree) ++delay_potential_[d];
    total_ += pos_potential_[offset];

    for (int d : distinct_delays_) {  // pairs (s2 - d, s2) against occ1 + {offset}
        const int p = ((s2 - d) % P + P) % P;
        const bool in1 = partial_.occ1(p) != PartialAssignment::kFree || p == offset;
        if (in1) {
            ++delay_potential_[d];
            total_ += delay_count_[d];
        }
        pos_potential_[p] += delay_count_[d];
    }
    partial_.place(msg, offset);
    notify();
}

void PotentialState::unschedule(int msg) {
    const int P = inst_->period;
    const int offset = partial_.offset_of(msg);
    const int s2 = (offset + inst_->delays[msg]) % P;

    for (int d : distinct_delays_) {  // drop pairs (s2 - d, s2); occ1 still holds offset
        const int p = ((s2 - d) % P + P) % P;
        if (partial_.occ1(p) != PartialAssignment::kFree) {
            --delay_potential_[d];
            total_ -= delay_count_[d];
        }
        pos_potential_[p] -= delay_count_[d];
    }
    for (int d : distinct_delays_) {  // drop pairs (offset, offset + d) against occ2 - {s2}
        const int x = (offset + d) % P;
        if (x != s2 && partial_.occ2(x) != PartialAssignment::kFree) --delay_potential_[d];
    }
    total_ -= pos_potential_[offset];
    partial_.remove(msg);
    notify();
}

int PotentialState::swap(int msg, int offset) {
    const int P = inst_->period;
    if (partial_.scheduled(msg)) throw std::invalid_argument("swap: message already scheduled");
    if (partial_.occ1(offset) != PartialAssignment::kFree)
        throw std::invalid_argument("swap: offset used in first period");
    const int hit = (offset + inst_->delays[msg]) % P;
    const int victim = partial_.occ2(hit);
    if (victim == PartialAssignment::kFree)
        throw std::invalid_argument("swap: target slot free in second period");
    unschedule(victim);
    schedule(msg, offset);
    return victim;
}

int message_potential(const PartialAssignment& partial, int d) {
    const Instance& inst = partial.instance();
    require_unit(inst, "message_potential");
    if (d < 0 || d >= inst.period) throw std::invalid_argument("message_potential: bad delay");
    int v = 0;
    for (int p = 0; p < inst.period; ++p)
        if (partial.occ1(p) != PartialAssignment::kFree &&
            partial.occ2((p + d) % inst.period) != PartialAssignment::kFree)
            ++v;
    return v;
}

namespace {

// Smallest offset where msg fits, or -1. O(P).
int first_fit_offset(const PotentialState& st, int msg) {
    const Instance& inst = st.instance();
    const int P = inst.period, d = inst.delays[msg];
    const auto& pa = st.partial();
    for (int o = 0; o < P; ++o)
        if (pa.occ1(o) == PartialAssignment::kFree &&
            pa.occ2((o + d) % P) == PartialAssignment::kFree)
            return o;
    return -1;
}

// Schedules every directly placeable message, smallest offset first, in
// input order; returns the first blocked message or -1.
int fill_greedily(PotentialState& st) {
    const int n = st.instance().n();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (st.partial().scheduled(i)) continue;
            int o = first_fit_offset(st, i);
            if (o >= 0) {
                st.schedule(i, o);
                progress = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (!st.partial().scheduled(i)) return i;
    return -1;
}

// Relocates `msg` to its smallest available offset, if any.
bool replace_anywhere(PotentialState& st, int msg) {
    int o = first_fit_offset(st, msg);
    if (o < 0) return false;
    st.schedule(msg, o);
    return true;
}

}  // namespace

GreedyOutcome swap_and_move(const Instance& inst,
                            std::function<void(const PotentialState&)> observer) {
    require_unit(inst, "swap_and_move");
    const int P = inst.period, n = inst.n();
    PotentialState st(inst);
    st.observer = std::move(observer);

    while (true) {
        int blocked = fill_greedily(st);
        if (blocked < 0) {
            GreedyOutcome out;
            out.scheduled_count = n;
            out.assignment = st.partial().to_assignment();
            return out;
        }

        // Swap while the total potential strictly increases. The blocked
        // message has no available offset, so every free first-period slot
        // has an occupied image; the potential delta of swapping there is
        // pos_potential[o] - pos_potential[victim's offset].
        const int d = inst.delays[blocked];
        long long best_delta = 0;  // only strictly improving swaps count
        int best_o = -1;
        for (int o = 0; o < P; ++o) {
            if (st.partial().occ1(o) != PartialAssignment::kFree) continue;
            const int victim = st.partial().occ2((o + d) % P);
            if (victim == PartialAssignment::kFree) continue;  // unreachable once blocked
            const long long delta =
                st.position_potential(o) - st.position_potential(st.partial().offset_of(victim));
            if (delta > best_delta) {  // ascending scan keeps the smallest offset on ties
                best_delta = delta;
                best_o = o;
            }
        }
        if (best_o >= 0) {
            st.swap(blocked, best_o);
            continue;
        }

        // Move: free one offset for the blocked message by relocating its
        // blockers (at most two) to other available offsets.
        bool moved = false;
        for (int o = 0; o < P && !moved; ++o) {
            const int b1 = st.partial().occ1(o);
            const int b2 = st.partial().occ2((o + d) % P);
            if (b1 == PartialAssignment::kFree && b2 == PartialAssignment::kFree) continue;
            std::vector<int> blockers;
            if (b1 != PartialAssignment::kFree) blockers.push_back(b1);
            if (b2 != PartialAssignment::kFree && b2 != b1) blockers.push_back(b2);

            std::vector<std::pair<int, int>> undo;  // (msg, old offset)
            for (int b : blockers) {
                undo.emplace_back(b, st.partial().offset_of(b));
                st.unschedule(b);
            }
            st.schedule(blocked, o);

            auto try_orders = [&](const std::vector<int>& order) {
                std::vector<int> placed;
                for (int b : order) {
                    if (!replace_anywhere(st, b)) {
                        for (auto it = placed.rbegin(); it != placed.rend(); ++it)
                            st.unschedule(*it);
                        return false;
                    }
                    placed.push_back(b);
                }
                return true;
            };
            moved = try_orders(blockers);
            if (!moved && blockers.size() == 2)
                moved = try_orders({blockers[1], blockers[0]});

            if (!moved) {
                st.unschedule(blocked);
                for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                    st.schedule(it->first, it->second);
            }
        }
        if (!moved) {
            GreedyOutcome out;
            out.scheduled_count = st.partial().size();
            out.failed_message = blocked;
            return out;
        }
    }
}

GreedyOutcome greedy_potential(const Instance& inst) {
    require_unit(inst, "greedy_potential");
    const int P = inst.period, n = inst.n();

    std::vector<std::uint8_t> in1(P, 0), in2(P, 0);
    std::vector<int> unsched_count(P, 0), potential(P, 0);
    std::vector<int> distinct;
    for (int d : inst.delays) {
        if (unsched_count[d]++ == 0) distinct.push_back(d);
    }

    std::vector<int> offsets(inst.n(), -1);
    GreedyOutcome out;
    for (int i = 0; i < n; ++i) {
        const int e = inst.delays[i];
        --unsched_count[e];

        long long best_score = -1;
        int best_o = -1;
        for (int o = 0; o < P; ++o) {
            if (in1[o] || in2[(o + e) % P]) continue;
            long long score = 0;
            for (int d : distinct) {
                const int cnt = unsched_count[d];
                if (cnt == 0) continue;
                int v = potential[d];
                if (in1[((o + e - d) % P + P) % P]) ++v;
                if (in2[(o + d) % P]) ++v;
                if (d == e) ++v;
                score += static_cast<long long>(cnt) * v;
            }
            if (score > best_score) {
                best_score = score;
                best_o = o;
            }
        }
        if (best_o < 0) {
            ++unsched_count[e];
            out.scheduled_count = i;
            out.failed_message = i;
            return out;
        }

        // Commit: update occupancy and per-delay potentials.
        const int s2 = (best_o + e) % P;
        for (int d : distinct) {
            if (in2[(best_o + d) % P]) ++potential[d];
            if (in1[((s2 - d) % P + P) % P]) ++potential[d];
            if (d == e) ++potential[d];
        }
        in1[best_o] = 1;
        in2[s2] = 1;
        offsets[i] = best_o;
    }
    out.scheduled_count = n;
    out.assignment = Assignment{std::move(offsets)};
    return out;
}

GreedyOutcome greedy_uniform(const Instance& inst, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GreedyOutcome out;
    std::vector<std::pair<int, int>> placed;
    std::vector<int> offsets(inst.n(), -1);
    placed.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        auto free = FreeOffsets::compute(inst.period, inst.msg_size, placed, inst.delays[i]);
        if (free.empty()) {
            out.scheduled_count = i;
            out.failed_message = i;
            return out;
        }
        int o = free.kth(rng.bounded(static_cast<std::uint32_t>(free.count())));
        offsets[i] = o;
        placed.emplace_back(o, inst.delays[i]);
    }
    out.scheduled_count = inst.n();
    out.assignment = Assignment{std::move(offsets)};
    return out;
}

double success_probability(int m, int n) {
    if (m < 1) throw std::invalid_argument("success_probability: m must be positive");
    if (n > m) throw std::invalid_argument("success_probability: n exceeds m");
    double prob = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int a = i - 1, b = 2 * (i - 1) - m;
        if (b < 0 || b > a) continue;  // step cannot fail below half load
        prob *= 1.0 - BigUint::ratio(binomial(a, b), binomial(m, a));
    }
    return prob;
}

}  // namespace pma
