#include "pma/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace pma {

Instance::Instance(int period_, int msg_size_, std::vector<int> delays_)
    : period(period_), msg_size(msg_size_), delays(std::move(delays_)) {
    if (period < 1) throw std::invalid_argument("Instance: period must be positive");
    if (msg_size < 1) throw std::invalid_argument("Instance: msg_size must be positive");
    if (msg_size > period) throw std::invalid_argument("Instance: msg_size exceeds period");
    for (auto& d : delays) {
        if (d < 0) throw std::invalid_argument("Instance: negative delay");
        d %= period;
    }
}

std::pair<std::vector<int>, std::vector<int>> windows(const Instance& inst, int i, int o) {
    if (i < 0 || i >= inst.n()) throw std::invalid_argument("windows: message index out of range");
    if (o < 0 || o >= inst.period) throw std::invalid_argument("windows: offset out of range");
    std::vector<int> w1(inst.msg_size), w2(inst.msg_size);
    for (int t = 0; t < inst.msg_size; ++t) {
        w1[t] = (o + t) % inst.period;
        w2[t] = (o + inst.delays[i] + t) % inst.period;
    }
    return {std::move(w1), std::move(w2)};
}

Trace trace_of(const Instance& inst, const Assignment& a) {
    if (static_cast<int>(a.offsets.size()) != inst.n())
        throw std::invalid_argument("trace_of: offset count mismatch");
    Trace tr;
    for (int i = 0; i < inst.n(); ++i) {
        auto [w1, w2] = windows(inst, i, a.offsets[i]);
        tr.used1.insert(tr.used1.end(), w1.begin(), w1.end());
        tr.used2.insert(tr.used2.end(), w2.begin(), w2.end());
    }
    std::sort(tr.used1.begin(), tr.used1.end());
    std::sort(tr.used2.begin(), tr.used2.end());
    return tr;
}

}  // namespace pma
