#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pma/bench.hpp"
#include "pma/reductions.hpp"

namespace pma {

/// Instance documents: {"period": P, "tau": T, "delays": [d0, ...]}.
Instance read_instance(std::istream& is);
Instance read_instance_file(const std::string& path);
void write_instance(const Instance& inst, std::ostream& os);

/// Assignment documents: {"offsets": [o0, ...]} on success, else the bare
/// string "UNSAT" or "UNKNOWN".
void write_assignment(const std::optional<Assignment>& a, bool proven_unsat, std::ostream& os);
std::optional<Assignment> read_assignment(std::istream& is);
std::optional<Assignment> read_assignment_file(const std::string& path);

/// Reduction records (sidecar files for `reduce` / `pullback`).
void write_record(const ReductionRecord& rec, std::ostream& os);
ReductionRecord read_record(std::istream& is);
ReductionRecord read_record_file(const std::string& path);

/// Experiment configs; same document family as instances.
ExperimentConfig read_config(std::istream& is);
ExperimentConfig read_config_file(const std::string& path);

}  // namespace pma
