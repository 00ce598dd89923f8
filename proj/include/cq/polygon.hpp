#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace cq {

using Point2 = Eigen::Vector2d;

// Regular m-gon inscribed in the unit circle, oriented with the first side
// horizontal at the bottom.  The uniform measure lives on the boundary.
struct PolygonSpec {
    int m;  // number of sides, >= 3

    explicit PolygonSpec(int m_);

    double side_length() const { return 2.0 * std::sin(std::numbers::pi / m); }
    double central_angle() const { return 2.0 * std::numbers::pi / m; }
};

// Linear isometry of the plane (zero translation), stored as its 2x2 matrix.
struct AffineMap2 {
    Eigen::Matrix2d mat;

    Point2 operator()(const Point2& p) const { return mat * p; }
    AffineMap2 power(int j) const;  // j-fold composition, j >= 0
};

// Vertices in counterclockwise order; the first two bound the horizontal
// bottom side: A1 = (-sin(pi/m), -cos(pi/m)), A2 = (sin(pi/m), -cos(pi/m)).
std::vector<Point2> vertices(const PolygonSpec& spec);

// The side-advancing map T (T applied (i-1) times sends side A1A2 onto side
// A_iA_{i+1}), built from its four closed-form coefficients
//   a = (1/2)(sin(3pi/m) csc(pi/m) - 1)    b = (1/2)(-sin(3pi/m) sec(pi/m) - tan(pi/m))
//   c = (1/2)(cot(pi/m) - cos(3pi/m) csc(pi/m))    d = (1/2)(cos(3pi/m) sec(pi/m) + 1)
// and cross-checked against the equivalent rotation by 2pi/m to 1e-12
// (std::logic_error on disagreement).
AffineMap2 rotation_map(const PolygonSpec& spec);

// n1 equally spaced points on the bottom side, both vertices included.
// Throws infeasible_error when n1 < 2 (both endpoints are conditional).
std::vector<Point2> base_side_points(const PolygonSpec& spec, std::int64_t n1);

// Distortion contributed by one side carrying n1 points:
// sin^2(pi/m) / (3 m (n1-1)^2).  Strictly decreasing in n1.
double side_error(const PolygonSpec& spec, std::int64_t n1);

// Optimal per-side counts for total n (vertices double-counted, so the counts
// sum to n + m).  Writing n = mk + l with 0 <= l < m: the l lowest-index
// sides get k+2 points, the rest k+1.  Throws infeasible_error when n < m.
std::vector<std::int64_t> polygon_side_counts(const PolygonSpec& spec, std::int64_t n);

double polygon_error_from_counts(const PolygonSpec& spec,
                                 const std::vector<std::int64_t>& counts);

struct PolygonQuantizer {
    int m;
    std::int64_t n;
    std::vector<std::int64_t> side_counts;
    std::vector<Point2> points;  // n points; vertices appear exactly once
    double error;
};

// Full conditional quantizer on the boundary: optimal side counts, base-side
// placements mapped around by the side-advancing map, vertices deduplicated
// by side-index bookkeeping (each side contributes all but its last point).
PolygonQuantizer polygon_quantizer(const PolygonSpec& spec, std::int64_t n);

// Error at the lattice sizes n = mk: sin^2(pi/m) / (3 k^2).
double polygon_error_mk(const PolygonSpec& spec, std::int64_t k);

// Limit of n^2 V_n: (1/3) m^2 sin^2(pi/m); increasing in m, -> pi^2/3.
double polygon_coefficient(const PolygonSpec& spec);

}  // namespace cq
