#pragma once

#include <cstdint>
#include <vector>

#include "cq/polygon.hpp"
#include "cq/rational.hpp"
#include "cq/segment.hpp"

namespace cq {

// One row of an error sequence.  The limiting error is 0 for every supported
// measure, so the scaled column is n^2 * V_n.  dim_estimate is the two-scale
// log-slope 2 (ln n - ln n0) / (ln V_{n0} - ln V_n) with n0 = max(n_min, n/2),
// which converges to the quantization dimension (and is exact for pure power
// laws); the first row, having no smaller scale, falls back to the
// definitional ratio 2 ln n / (-ln V_n).
struct ErrorSequencePoint {
    std::int64_t n;
    Rational error_exact;  // meaningful only when has_exact
    bool has_exact;
    double error_float;
    double n2_scaled;
    double dim_estimate;
    std::vector<std::int64_t> allocation_counts;
};

// Errors for every feasible n up to n_max via one greedy allocation sweep;
// exact rationals with derived float columns.
std::vector<ErrorSequencePoint> error_sequence_segment(const SegmentProblem& problem,
                                                       std::int64_t n_max);

// Errors for every n in [m, n_max] from the closed-form side counts.
std::vector<ErrorSequencePoint> error_sequence_polygon(const PolygonSpec& spec,
                                                       std::int64_t n_max);

}  // namespace cq
