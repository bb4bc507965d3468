#pragma once

#include <optional>

#include "pma/instance.hpp"

namespace pma {

/// One offending pair when validation fails.
struct Violation {
    int first = -1;
    int second = -1;
    int period = 0;  // 1 or 2
};

struct ValidationResult {
    std::optional<Violation> violation;
    bool ok() const { return !violation.has_value(); }
};

/// Checks that no two messages overlap in either period. O(n log n): sorts
/// window start positions per period and tests cyclic neighbours; correct
/// because all windows share length tau.
ValidationResult validate(const Instance& inst, const Assignment& a);

}  // namespace pma
