#include "pma/greedy.hpp"

#include "pma/available.hpp"

namespace pma {

namespace {

template <typename PickOffset>
GreedyOutcome run_greedy(const Instance& inst, PickOffset pick) {
    GreedyOutcome out;
    std::vector<std::pair<int, int>> placed;
    std::vector<int> offsets(inst.n(), -1);
    placed.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        auto free = FreeOffsets::compute(inst.period, inst.msg_size, placed, inst.delays[i]);
        std::optional<int> o = pick(free);
        if (!o) {
            out.scheduled_count = i;
            out.failed_message = i;
            return out;
        }
        offsets[i] = *o;
        placed.emplace_back(*o, inst.delays[i]);
    }
    out.scheduled_count = inst.n();
    out.assignment = Assignment{std::move(offsets)};
    return out;
}

}  // namespace

GreedyOutcome first_fit(const Instance& inst) {
    return run_greedy(inst, [](const FreeOffsets& free) { return free.first(); });
}

GreedyOutcome meta_offset(const Instance& inst) {
    const int tau = inst.msg_size;
    const int m = inst.period / tau;
    return run_greedy(inst,
                      [&](const FreeOffsets& free) { return free.first_multiple(tau, m); });
}

}  // namespace pma
