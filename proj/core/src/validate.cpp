#include "pma/validate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pma {

namespace {

// All windows share length tau, so sorting the start slots and checking
// cyclically adjacent gaps covers every pair.
std::optional<std::pair<int, int>> find_overlap(std::vector<std::pair<int, int>>& starts, int P,
                                                int tau) {
    const int n = static_cast<int>(starts.size());
    if (n < 2) return std::nullopt;
    std::sort(starts.begin(), starts.end());
    for (int k = 0; k + 1 < n; ++k)
        if (starts[k + 1].first - starts[k].first < tau)
            return std::make_pair(starts[k].second, starts[k + 1].second);
    if (starts.front().first + P - starts.back().first < tau)
        return std::make_pair(starts.back().second, starts.front().second);
    return std::nullopt;
}

std::optional<Violation> check_period(std::vector<std::pair<int, int>>& starts, int P, int tau,
                                      int period) {
    if (auto hit = find_overlap(starts, P, tau)) {
        auto [i, j] = *hit;
        if (i > j) std::swap(i, j);
        return Violation{i, j, period};
    }
    return std::nullopt;
}

}  // namespace

ValidationResult validate(const Instance& inst, const Assignment& a) {
    if (static_cast<int>(a.offsets.size()) != inst.n())
        throw std::invalid_argument("validate: offset count mismatch");
    for (int o : a.offsets)
        if (o < 0 || o >= inst.period) throw std::invalid_argument("validate: offset out of range");

    const int P = inst.period, tau = inst.msg_size;
    std::vector<std::pair<int, int>> starts;
    starts.reserve(inst.n());

    for (int i = 0; i < inst.n(); ++i) starts.emplace_back(a.offsets[i], i);
    if (auto v = check_period(starts, P, tau, 1)) return {v};

    starts.clear();
    for (int i = 0; i < inst.n(); ++i)
        starts.emplace_back((a.offsets[i] + inst.delays[i]) % P, i);
    if (auto v = check_period(starts, P, tau, 2)) return {v};

    return {};
}

}  // namespace pma
