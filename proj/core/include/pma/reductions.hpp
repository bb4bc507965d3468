#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pma/greedy.hpp"
#include "pma/instance.hpp"

namespace pma {

enum class ReductionKind { Normalize, UnitSize, Buffer };

std::string to_string(ReductionKind k);
ReductionKind reduction_kind_from_string(const std::string& s);

/// Everything needed to turn an assignment of the reduced instance back into
/// one of the original. For Buffer the pulled-back assignment is valid
/// against the buffered delays (buffering is the point of that transform);
/// `pullback_target()` returns the instance a pullback validates against.
struct ReductionRecord {
    ReductionKind kind = ReductionKind::Normalize;
    Instance original;
    Instance reduced;
    std::vector<int> added_latency;  // per message; zero except for Buffer

    // Normalize / UnitSize: delays were scaled by `scale` and the period by
    // the same factor; scaled window size during compactification is
    // scale * original tau.
    int scale = 1;

    // UnitSize: the aligned block is 2 * unit_block_half; pullback first maps
    // a unit offset o to o * 2 * unit_block_half - unit_shift[i].
    int unit_block_half = 0;
    std::vector<int> unit_shift;

    // Buffer: delays after rounding up (original timescale) and the rescale
    // divisor applied when it divides P.
    std::vector<int> buffered_delays;
    int rescale = 1;

    Instance pullback_target() const;
};

/// Lemma-style period normalization: with P = m*tau + r, builds
/// (m*P, m*tau + r, m*d) whose size divides its period. Load grows by at
/// most a factor (1 + 1/m).
ReductionRecord normalize_period(const Instance& inst);

/// Size-1 reduction at (at least) doubled load: rounds delays down to
/// multiples of 2*tau and divides the timeline by that block. When
/// 2*tau does not divide P, a block-aligned rescale is applied first;
/// throws when P < 2*tau (no block fits).
ReductionRecord to_unit_size(const Instance& inst);

/// Buffers every message until its delay is a multiple of tau/k (at most
/// tau/k - 1 added slots each); the aligned instance rescales to message
/// size k when tau/k divides P.
ReductionRecord buffer_to_multiple(const Instance& inst, int k);

/// Maps an assignment of record.reduced to one of record.pullback_target().
Assignment pullback(const ReductionRecord& record, const Assignment& reduced_assignment);

/// The buffering reference remainder t0 in [0, tau) minimizing total added
/// latency L(t) = sum_i ((t - d_i) mod tau), plus that minimum. Guarantees
/// L(t0) <= n*(tau-1)/2.
std::pair<int, long long> best_reference_remainder(const Instance& inst);

/// Compact pairs restricted to the smaller parity class, then singles; for
/// tau = 2 with 2 | P this succeeds whenever load < 4/9.
GreedyOutcome compact_pair_tau2_solve(const Instance& inst);

}  // namespace pma
