#pragma once

#include <cstdint>
#include <vector>

#include "cq/rational.hpp"
#include "cq/segment.hpp"

namespace cq {

// Minimizes the total distortion over all feasible count vectors by exact
// enumeration; among equal-error optima returns the lexicographically
// smallest counts vector.  Enumeration is capped at 1e6 candidate
// compositions (std::invalid_argument beyond that) — intended as the
// reference search, not the production path.
// Throws infeasible_error (naming the minimal feasible n) when n is too small.
Allocation allocate_exhaustive(const std::vector<SubInterval>& parts, std::int64_t n);

// Marginal-gain greedy: starts from the per-interval minima and repeatedly
// grants a point to the subinterval with the largest exact error decrease
// (ties broken toward the lowest index).  Per-interval errors are convex and
// decreasing in their counts, so the greedy total equals the exhaustive
// optimum.  Throws as allocate_exhaustive.
Allocation allocate_greedy(const std::vector<SubInterval>& parts, std::int64_t n);

struct SweepRow {
    std::int64_t n;
    Allocation allocation;
    Rational error;
};

// One greedy pass recording the optimal allocation and exact total error for
// every n from minimal_feasible_n(parts) up to n_max (inclusive).
std::vector<SweepRow> greedy_sweep(const std::vector<SubInterval>& parts, std::int64_t n_max);

struct TripleKLM {
    std::int64_t k;
    std::int64_t l;
    std::int64_t m;
};

// Closed-form optimal counts for the unit segment conditioned on {1/4, 1/2},
// by residue class of n mod 4 (valid for n >= 6, std::out_of_range below):
//   n = 4x+2 -> (x+1, x+2, 2x+1)      n = 4x+3 -> (x+1, x+2, 2x+2)
//   n = 4x+4 -> (x+2, x+2, 2x+2)      n = 4x+5 -> (x+2, x+2, 2x+3)
TripleKLM closed_form_quarter_half(std::int64_t n);

// Closed-form optimal counts for the unit segment conditioned on the uniform
// grid {1/k, 2/k, ..., 1}.  Writing n = mk + l with 0 <= l < k:
//   l == 0: counts (m, m+1, ..., m+1)
//   l >= 1: first count m+1; the l-1 lowest-index interior subintervals get
//           m+2, the rest m+1.  (Any (l-1)-subset is optimal; lowest indices
//           keep the output deterministic.)
// Throws infeasible_error when n < k.
Allocation closed_form_uniform_grid(std::int64_t k, std::int64_t n);

}  // namespace cq
