#include "pma/partial.hpp"

#include <stdexcept>

namespace pma {

PartialAssignment::PartialAssignment(const Instance& inst)
    : inst_(&inst),
      offsets_(inst.n(), kFree),
      occ1_(inst.period, kFree),
      occ2_(inst.period, kFree) {}

bool PartialAssignment::can_place(int i, int o) const {
    const int P = inst_->period, tau = inst_->msg_size, d = inst_->delays[i];
    for (int t = 0; t < tau; ++t) {
        if (occ1_[(o + t) % P] != kFree) return false;
        if (occ2_[(o + d + t) % P] != kFree) return false;
    }
    return true;
}

void PartialAssignment::place(int i, int o) {
    if (i < 0 || i >= inst_->n()) throw std::invalid_argument("place: bad message index");
    if (o < 0 || o >= inst_->period) throw std::invalid_argument("place: bad offset");
    if (scheduled(i)) throw std::invalid_argument("place: message already scheduled");
    if (!can_place(i, o)) throw std::invalid_argument("place: collision");
    const int P = inst_->period, tau = inst_->msg_size, d = inst_->delays[i];
    for (int t = 0; t < tau; ++t) {
        occ1_[(o + t) % P] = i;
        occ2_[(o + d + t) % P] = i;
    }
    offsets_[i] = o;
    ++scheduled_count_;
}

void PartialAssignment::remove(int i) {
    if (i < 0 || i >= inst_->n() || !scheduled(i))
        throw std::invalid_argument("remove: message not scheduled");
    const int P = inst_->period, tau = inst_->msg_size, d = inst_->delays[i];
    const int o = offsets_[i];
    for (int t = 0; t < tau; ++t) {
        occ1_[(o + t) % P] = kFree;
        occ2_[(o + d + t) % P] = kFree;
    }
    offsets_[i] = kFree;
    --scheduled_count_;
}

std::vector<std::pair<int, int>> PartialAssignment::placed() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(scheduled_count_);
    for (int i = 0; i < inst_->n(); ++i)
        if (offsets_[i] != kFree) out.emplace_back(offsets_[i], inst_->delays[i]);
    return out;
}

Assignment PartialAssignment::to_assignment() const {
    if (scheduled_count_ != inst_->n())
        throw std::logic_error("to_assignment: assignment is not total");
    return Assignment{offsets_};
}

}  // namespace pma
