#pragma once

#include <cstdint>
#include <vector>

#include "cq/rational.hpp"

namespace cq {

// Role of a subinterval's endpoints in the quantizer.  A "fixed" endpoint is a
// conditional point (or a conditioned support endpoint) that every admissible
// quantizer must contain; a "free" endpoint is a support endpoint that carries
// no such constraint.
enum class IntervalKind {
    LeftFree,   // [a, c]: left end is the unconditioned support endpoint
    BothFixed,  // [c, d]: both ends are conditional points
    RightFree,  // [d, b]: right end is the unconditioned support endpoint
};

// Uniform distribution on [a, b] together with the conditional set beta: the
// points every quantizer must include.  Immutable once constructed.
struct SegmentProblem {
    Rational a;
    Rational b;
    std::vector<Rational> beta;  // strictly increasing, each within [a, b]

    // Validates a < b, beta nonempty, strictly increasing, within [a, b];
    // throws std::invalid_argument otherwise (duplicates included).
    SegmentProblem(Rational a_, Rational b_, std::vector<Rational> beta_);

    Rational support_length() const { return b - a; }
};

struct SubInterval {
    Rational lo;
    Rational hi;
    IntervalKind kind;
    int index;  // 1-based position within the partition

    Rational length() const { return hi - lo; }
};

// Point counts per subinterval.  Conditional points shared by two adjacent
// subintervals are counted once in each, so sum(counts) = n + (#subintervals - 1).
struct Allocation {
    std::vector<std::int64_t> counts;
};

struct QuantizerResult {
    std::vector<Rational> points;  // sorted, deduplicated, contains beta
    Rational error;
    Allocation allocation;
};

// Smallest admissible count for a subinterval: every fixed endpoint must be a
// quantizer point, and a free endpoint needs at least one point in the piece.
inline std::int64_t min_count(IntervalKind kind) {
    return kind == IntervalKind::BothFixed ? 2 : 1;
}

// Splits [a, b] at the conditional points.  Subintervals tile the support in
// left-to-right order with breakpoints exactly beta ∪ {a, b}.
std::vector<SubInterval> partition(const SegmentProblem& problem);

// Smallest n for which a feasible allocation exists (equals card(beta)).
std::int64_t minimal_feasible_n(const std::vector<SubInterval>& parts);

// Optimal placement of `count` points inside one subinterval:
//   LeftFree  [a, c]: a + (2j-1)(c-a)/(2k-1),   j = 1..k   (last point is c)
//   BothFixed [c, d]: c + (j-1)(d-c)/(l-1),     j = 1..l   (ends are c and d)
//   RightFree [d, b]: d + 2(j-1)(b-d)/(2m-1),   j = 1..m   (first point is d)
// Throws infeasible_error when count < min_count(kind).
std::vector<Rational> place_points(const SubInterval& sub, std::int64_t count);

// Exact distortion contributed by one subinterval under optimal placement:
//   LeftFree/RightFree: len^3 / (3 * support_length * (2c-1)^2)
//   BothFixed:          len^3 / (12 * support_length * (c-1)^2)
// Strictly decreasing in count.  Throws infeasible_error as place_points.
Rational sub_error(const SubInterval& sub, std::int64_t count, const Rational& support_length);

// Assembles the full n-point conditional quantizer for a given allocation:
// union of per-subinterval placements deduplicated at shared conditional
// points, with the exact total distortion.  Throws std::invalid_argument when
// the allocation is inconsistent with n or violates per-interval minima.
QuantizerResult conditional_quantizer(const SegmentProblem& problem, std::int64_t n,
                                      const Allocation& allocation);

}  // namespace cq
