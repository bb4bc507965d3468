#include "pma/available.hpp"

#include <algorithm>
#include <stdexcept>

namespace pma {

std::optional<int> FreeOffsets::first() const {
    if (segs_.empty()) return std::nullopt;
    return segs_.front().start;
}

int FreeOffsets::kth(long long k) const {
    for (const auto& s : segs_) {
        if (k < s.len) return s.start + static_cast<int>(k);
        k -= s.len;
    }
    throw std::out_of_range("FreeOffsets::kth");
}

std::optional<int> FreeOffsets::first_multiple(int step, int limit) const {
    const long long cap = static_cast<long long>(step) * limit;
    for (const auto& s : segs_) {
        int first_mult = ((s.start + step - 1) / step) * step;
        if (first_mult < s.start + s.len && first_mult < cap) return first_mult;
    }
    return std::nullopt;
}

std::vector<int> FreeOffsets::materialize() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (const auto& s : segs_)
        for (int o = s.start; o < s.start + s.len; ++o) out.push_back(o);
    return out;
}

FreeOffsets FreeOffsets::compute(int period, int tau,
                                 const std::vector<std::pair<int, int>>& placed, int d) {
    // A scheduled message at offset o_j with delay d_j forbids, for the new
    // message of delay d, the cyclic runs
    //   [o_j - tau + 1, o_j + tau - 1]                  (first period)
    //   [o_j + d_j - d - tau + 1, o_j + d_j - d + tau - 1] (second period)
    // each of 2*tau - 1 offsets.
    FreeOffsets out;
    const int span = 2 * tau - 1;
    if (span >= period && !placed.empty()) return out;  // one message blocks everything

    std::vector<std::pair<int, int>> forb;  // non-wrapping [start, end) pieces
    forb.reserve(placed.size() * 4);
    auto add_run = [&](long long start) {
        int s = static_cast<int>(((start % period) + period) % period);
        if (s + span <= period) {
            forb.emplace_back(s, s + span);
        } else {
            forb.emplace_back(s, period);
            forb.emplace_back(0, s + span - period);
        }
    };
    for (const auto& [o, dj] : placed) {
        add_run(static_cast<long long>(o) - tau + 1);
        add_run(static_cast<long long>(o) + dj - d - tau + 1);
    }
    std::sort(forb.begin(), forb.end());

    int cur = 0;
    for (const auto& [s, e] : forb) {
        if (s > cur) {
            out.segs_.push_back({cur, s - cur});
            out.total_ += s - cur;
        }
        cur = std::max(cur, e);
    }
    if (cur < period) {
        out.segs_.push_back({cur, period - cur});
        out.total_ += period - cur;
    }
    return out;
}

std::vector<int> available_offsets(const Instance& inst, const PartialAssignment& partial, int d) {
    if (d < 0 || d >= inst.period) throw std::invalid_argument("available_offsets: bad delay");
    return FreeOffsets::compute(inst.period, inst.msg_size, partial.placed(), d).materialize();
}

}  // namespace pma
