#pragma once

#include <stdexcept>

namespace cq {

// Raised when a requested point count or total n cannot be realized by any
// admissible quantizer (count below the per-interval minimum, n below the
// minimal feasible total, ...).  Distinct from std::invalid_argument, which
// signals malformed input.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cq
