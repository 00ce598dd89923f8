#pragma once

#include <cstdint>
#include <vector>

#include "cq/polygon.hpp"
#include "cq/rational.hpp"
#include "cq/segment.hpp"

namespace cq {

// Exact distortion of an arbitrary quantizer containing the conditional set:
// sums ((right-site)^3 + (site-left)^3) / (3(b-a)) over the Voronoi cells,
// whose boundaries are midpoints of adjacent sites clipped to the support.
// `points` must be strictly increasing, inside [a, b], and contain beta
// (std::invalid_argument otherwise).
Rational exact_distortion(const SegmentProblem& problem, const std::vector<Rational>& points);

// Same cellwise sum in floating point over arbitrary sorted sites.
double float_distortion(double a, double b, const std::vector<double>& sites);

struct LloydResult {
    std::vector<double> points;  // sorted, conditional points in place
    double error;
    int iterations;
    bool converged;
};

// Fixed-point iteration with the conditional points frozen: every free point
// is repeatedly reset to the midpoint of its current Voronoi cell (the
// centroid under the uniform measure).  Free points start uniformly at random
// inside their subintervals (deterministic per seed).  Stops when the largest
// single-step movement drops below tol or after max_iter sweeps; a
// non-converged run reports its last iterate rather than throwing.
LloydResult lloyd_conditional(const SegmentProblem& problem, const Allocation& allocation,
                              std::uint64_t seed, double tol = 1e-12, int max_iter = 100000);

// Same iteration from an explicit initial configuration (sorted, conditional
// points included verbatim).
LloydResult lloyd_conditional_from(const SegmentProblem& problem, const Allocation& allocation,
                                   const std::vector<double>& initial, double tol = 1e-12,
                                   int max_iter = 100000);

struct GridSearchResult {
    std::vector<double> free_points;
    double error;
};

// Global search over the positions of the free (non-conditional) points for
// n - card(beta) <= 3: a dense pass over sorted tuples on a uniform grid of
// the support (step = coarse_step * support length), then iterative local
// refinement (step / 10 per level) down to refine_to * support length around
// both the dense optimum and the closed-form optimum.  Returns the best
// configuration found.
GridSearchResult grid_search_free_points(const SegmentProblem& problem, std::int64_t n,
                                         double coarse_step = 1e-4, double refine_to = 1e-8);

// Arc-length-uniform midpoint Riemann sum of the squared distance to the
// nearest quantizer point over the polygon boundary, normalized by the
// boundary length.  Requires samples >= 10^4 and nonempty points.
double boundary_discretization_error(const PolygonSpec& spec, const std::vector<Point2>& points,
                                     std::int64_t samples);

}  // namespace cq
