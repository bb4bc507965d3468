#include "pma/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "meta_state.hpp"
#include "pma/validate.hpp"

namespace pma {

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Normalize: return "normalize";
        case ReductionKind::UnitSize: return "unit_size";
        case ReductionKind::Buffer: return "buffer";
    }
    return "?";
}

ReductionKind reduction_kind_from_string(const std::string& s) {
    if (s == "normalize") return ReductionKind::Normalize;
    if (s == "unit_size") return ReductionKind::UnitSize;
    if (s == "buffer") return ReductionKind::Buffer;
    throw std::invalid_argument("unknown reduction kind: " + s);
}

Instance ReductionRecord::pullback_target() const {
    if (kind == ReductionKind::Buffer)
        return Instance(original.period, original.msg_size, buffered_delays);
    return original;
}

namespace {

// Left-translates messages until every offset is a multiple of `scale`,
// anchoring one message at a time on contact. Valid for assignments whose
// window size and delays are multiples of `scale` (window size = scale*tau).
// Mirrors the constructive argument behind the period normalization.
std::vector<int> compactify_to_multiples(int big_period, int window, int scale,
                                         const std::vector<int>& delays, std::vector<int> offsets) {
    const int n = static_cast<int>(offsets.size());
    if (n == 0) return offsets;

    // Rotate so message 0 sits at offset 0 (rotation keeps validity).
    const int rot = offsets[0];
    for (auto& o : offsets) o = ((o - rot) % big_period + big_period) % big_period;

    std::vector<char> anchored(n, 0);
    anchored[0] = 1;
    int anchored_count = 1;
    while (anchored_count < n) {
        // Clearance of a moving message before it touches an anchored window,
        // in either period; the group shift is the minimum over all of them.
        long long shift = big_period;
        for (int i = 0; i < n; ++i) {
            if (anchored[i]) continue;
            for (int a = 0; a < n; ++a) {
                if (!anchored[a]) continue;
                for (int period = 1; period <= 2; ++period) {
                    long long si = offsets[i] + (period == 2 ? delays[i] : 0);
                    long long sa = offsets[a] + (period == 2 ? delays[a] : 0);
                    long long clear = ((si - sa - window) % big_period + big_period) % big_period;
                    shift = std::min(shift, clear);
                }
            }
        }
        if (shift > 0)
            for (int i = 0; i < n; ++i)
                if (!anchored[i])
                    offsets[i] = static_cast<int>(((offsets[i] - shift) % big_period + big_period) %
                                                  big_period);
        // Anchor every message now in contact with an anchored one.
        for (int i = 0; i < n; ++i) {
            if (anchored[i]) continue;
            bool contact = false;
            for (int a = 0; a < n && !contact; ++a) {
                if (!anchored[a]) continue;
                for (int period = 1; period <= 2 && !contact; ++period) {
                    long long si = offsets[i] + (period == 2 ? delays[i] : 0);
                    long long sa = offsets[a] + (period == 2 ? delays[a] : 0);
                    if (((si - sa - window) % big_period + big_period) % big_period == 0)
                        contact = true;
                }
            }
            if (contact) {
                anchored[i] = 1;
                ++anchored_count;
            }
        }
    }
    for (int o : offsets)
        if (o % scale != 0) throw std::logic_error("compactify: offset not aligned");
    return offsets;
}

}  // namespace

ReductionRecord normalize_period(const Instance& inst) {
    const int P = inst.period, tau = inst.msg_size;
    const int m = P / tau, r = P % tau;

    ReductionRecord rec;
    rec.kind = ReductionKind::Normalize;
    rec.original = inst;
    rec.scale = m;
    rec.added_latency.assign(inst.n(), 0);

    std::vector<int> delays(inst.n());
    for (int i = 0; i < inst.n(); ++i) delays[i] = m * inst.delays[i];
    rec.reduced = Instance(m * P, m * tau + r, std::move(delays));
    return rec;
}

ReductionRecord to_unit_size(const Instance& inst) {
    const int P = inst.period, tau = inst.msg_size;

    ReductionRecord rec;
    rec.kind = ReductionKind::UnitSize;
    rec.original = inst;
    rec.added_latency.assign(inst.n(), 0);

    if (P % (2 * tau) == 0) {
        rec.scale = 1;
        rec.unit_block_half = tau;
    } else {
        const int q = P / (2 * tau);
        if (q < 1)
            throw std::invalid_argument("to_unit_size: period holds no doubled message block");
        rec.scale = 2 * q;   // delays and period scale by 2q; the aligned
        rec.unit_block_half = P;  // doubled block is then exactly 2P
    }

    const long long bigP = static_cast<long long>(rec.scale) * P;
    const long long block = 2LL * rec.unit_block_half;
    std::vector<int> unit_delays(inst.n());
    rec.unit_shift.assign(inst.n(), 0);
    for (int i = 0; i < inst.n(); ++i) {
        const long long d = static_cast<long long>(rec.scale) * inst.delays[i];
        unit_delays[i] = static_cast<int>(d / block);
        rec.unit_shift[i] = (d % block < rec.unit_block_half) ? 0 : rec.unit_block_half;
    }
    rec.reduced = Instance(static_cast<int>(bigP / block), 1, std::move(unit_delays));
    return rec;
}

ReductionRecord buffer_to_multiple(const Instance& inst, int k) {
    const int tau = inst.msg_size;
    if (k < 1 || tau % k != 0) throw std::invalid_argument("buffer_to_multiple: k must divide tau");
    const int s = tau / k;

    ReductionRecord rec;
    rec.kind = ReductionKind::Buffer;
    rec.original = inst;
    rec.added_latency.assign(inst.n(), 0);
    rec.buffered_delays.assign(inst.n(), 0);
    for (int i = 0; i < inst.n(); ++i) {
        const int d = inst.delays[i];
        const int up = (d + s - 1) / s * s;
        rec.added_latency[i] = up - d;
        rec.buffered_delays[i] = up % inst.period;
    }

    if (inst.period % s == 0) {
        rec.rescale = s;
        std::vector<int> scaled(inst.n());
        for (int i = 0; i < inst.n(); ++i) scaled[i] = rec.buffered_delays[i] / s;
        rec.reduced = Instance(inst.period / s, k, std::move(scaled));
    } else {
        rec.rescale = 1;
        rec.reduced = Instance(inst.period, tau, rec.buffered_delays);
    }
    return rec;
}

Assignment pullback(const ReductionRecord& rec, const Assignment& reduced_assignment) {
    if (static_cast<int>(reduced_assignment.offsets.size()) != rec.reduced.n())
        throw std::invalid_argument("pullback: offset count mismatch");
    {
        auto check = validate(rec.reduced, reduced_assignment);
        if (!check.ok()) throw std::invalid_argument("pullback: reduced assignment is invalid");
    }

    const Instance& orig = rec.original;
    switch (rec.kind) {
        case ReductionKind::Normalize: {
            // Offsets already live on the scaled timeline; align to multiples
            // of the scale, then divide.
            auto aligned =
                compactify_to_multiples(rec.reduced.period, rec.scale * orig.msg_size, rec.scale,
                                        rec.reduced.delays, reduced_assignment.offsets);
            std::vector<int> offsets(orig.n());
            for (int i = 0; i < orig.n(); ++i) offsets[i] = aligned[i] / rec.scale;
            return Assignment{std::move(offsets)};
        }
        case ReductionKind::UnitSize: {
            const long long block = 2LL * rec.unit_block_half;
            const long long bigP = static_cast<long long>(rec.scale) * orig.period;
            std::vector<int> scaled(orig.n());
            for (int i = 0; i < orig.n(); ++i) {
                long long o = reduced_assignment.offsets[i] * block - rec.unit_shift[i];
                scaled[i] = static_cast<int>(((o % bigP) + bigP) % bigP);
            }
            if (rec.scale == 1) return Assignment{std::move(scaled)};
            std::vector<int> big_delays(orig.n());
            for (int i = 0; i < orig.n(); ++i)
                big_delays[i] = static_cast<int>(
                    (static_cast<long long>(rec.scale) * orig.delays[i]) % bigP);
            auto aligned = compactify_to_multiples(static_cast<int>(bigP),
                                                   rec.scale * orig.msg_size, rec.scale,
                                                   big_delays, std::move(scaled));
            std::vector<int> offsets(orig.n());
            for (int i = 0; i < orig.n(); ++i) offsets[i] = aligned[i] / rec.scale;
            return Assignment{std::move(offsets)};
        }
        case ReductionKind::Buffer: {
            std::vector<int> offsets(orig.n());
            for (int i = 0; i < orig.n(); ++i)
                offsets[i] = reduced_assignment.offsets[i] * rec.rescale;
            return Assignment{std::move(offsets)};
        }
    }
    throw std::logic_error("pullback: bad kind");
}

std::pair<int, long long> best_reference_remainder(const Instance& inst) {
    const int tau = inst.msg_size;
    int best_t = 0;
    long long best_total = -1;
    for (int t = 0; t < tau; ++t) {
        long long total = 0;
        for (int d : inst.delays) total += ((t - d) % tau + tau) % tau;
        if (best_total < 0 || total < best_total) {
            best_total = total;
            best_t = t;
        }
    }
    return {best_t, best_total < 0 ? 0 : best_total};
}

GreedyOutcome compact_pair_tau2_solve(const Instance& inst) {
    if (inst.msg_size != 2) throw std::invalid_argument("compact_pair_tau2_solve: requires tau = 2");
    if (inst.period % 2 != 0)
        throw std::invalid_argument("compact_pair_tau2_solve: requires 2 | P");
    const int m = inst.period / 2;

    auto splits = split_delays(inst);
    std::vector<SplitDelay> even, odd;
    for (const auto& s : splits) (s.rem == 0 ? even : odd).push_back(s);

    // Pair the class with fewer-or-equal members; the rest go in singly.
    std::vector<SplitDelay>& pair_class = (even.size() <= odd.size()) ? even : odd;
    std::vector<SplitDelay> pool = pair_class;
    auto pairs = detail::build_pair_sequence(pool, m);

    detail::MetaState st(m);
    std::vector<int> meta_of(inst.n(), -1);
    for (const auto& pair : pairs) {
        int base = st.find_chain_base(pair);
        if (base < 0) break;
        st.commit_chain(pair, base, meta_of);
    }

    std::vector<SplitDelay> rest;
    for (const auto& s : splits)
        if (meta_of[s.msg] < 0) rest.push_back(s);
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
    std::vector<int> offsets(inst.n());
    for (int i = 0; i < inst.n(); ++i) offsets[i] = meta_of[i] * 2;
    GreedyOutcome out;
    out.scheduled_count = inst.n();
    out.assignment = Assignment{std::move(offsets)};
    return out;
}

}  // namespace pma
