#include "cq/polygon.hpp"

#include <stdexcept>
#include <string>

#include "cq/errors.hpp"

namespace cq {

namespace {
constexpr double kPi = std::numbers::pi;
}

PolygonSpec::PolygonSpec(int m_) : m(m_) {
    if (m < 3) {
        throw std::invalid_argument("polygon requires m >= 3 sides (got m=" + std::to_string(m) +
                                    ")");
    }
}

AffineMap2 AffineMap2::power(int j) const {
    AffineMap2 out{Eigen::Matrix2d::Identity()};
    for (int i = 0; i < j; ++i) out.mat = mat * out.mat;
    return out;
}

std::vector<Point2> vertices(const PolygonSpec& spec) {
    const double theta1 = 1.5 * kPi - kPi / spec.m;
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(spec.m));
    for (int j = 0; j < spec.m; ++j) {
        const double theta = theta1 + j * spec.central_angle();
        out.emplace_back(std::cos(theta), std::sin(theta));
    }
    return out;
}

AffineMap2 rotation_map(const PolygonSpec& spec) {
    const double t = kPi / spec.m;
    const double a = 0.5 * (std::sin(3.0 * t) / std::sin(t) - 1.0);
    const double b = 0.5 * (-std::sin(3.0 * t) / std::cos(t) - std::tan(t));
    const double c = 0.5 * (std::cos(t) / std::sin(t) - std::cos(3.0 * t) / std::sin(t));
    const double d = 0.5 * (std::cos(3.0 * t) / std::cos(t) + 1.0);

    AffineMap2 map;
    map.mat << a, b, c, d;

    // The coefficients simplify to the rotation by the central angle; both
    // routes are evaluated and must agree.
    Eigen::Matrix2d rotation = Eigen::Rotation2Dd(spec.central_angle()).toRotationMatrix();
    if ((map.mat - rotation).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::logic_error("side-advancing map coefficients disagree with the rotation by "
                               "the central angle");
    }
    return map;
}

std::vector<Point2> base_side_points(const PolygonSpec& spec, std::int64_t n1) {
    if (n1 < 2) {
        throw infeasible_error("a side carries both of its vertices, so its count must be >= 2 "
                               "(got " + std::to_string(n1) + ")");
    }
    const double s = std::sin(kPi / spec.m);
    const double y = -std::cos(kPi / spec.m);
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(n1));
    for (std::int64_t j = 1; j <= n1; ++j) {
        const double x = -s + 2.0 * static_cast<double>(j - 1) * s / static_cast<double>(n1 - 1);
        out.emplace_back(x, y);
    }
    return out;
}

double side_error(const PolygonSpec& spec, std::int64_t n1) {
    if (n1 < 2) {
        throw infeasible_error("side count must be >= 2 (got " + std::to_string(n1) + ")");
    }
    const double s = std::sin(kPi / spec.m);
    const double d = static_cast<double>(n1 - 1);
    return s * s / (3.0 * spec.m * d * d);
}

std::vector<std::int64_t> polygon_side_counts(const PolygonSpec& spec, std::int64_t n) {
    if (n < spec.m) {
        throw infeasible_error("n=" + std::to_string(n) + " infeasible; minimal feasible n is " +
                               std::to_string(spec.m) + " (the vertices)");
    }
    const std::int64_t k = n / spec.m;
    const std::int64_t l = n % spec.m;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(spec.m), k + 1);
    for (std::int64_t i = 0; i < l; ++i) counts[static_cast<std::size_t>(i)] = k + 2;
    return counts;
}

double polygon_error_from_counts(const PolygonSpec& spec,
                                 const std::vector<std::int64_t>& counts) {
    double total = 0.0;
    for (const std::int64_t c : counts) total += side_error(spec, c);
    return total;
}

PolygonQuantizer polygon_quantizer(const PolygonSpec& spec, std::int64_t n) {
    PolygonQuantizer result;
    result.m = spec.m;
    result.n = n;
    result.side_counts = polygon_side_counts(spec, n);
    result.error = polygon_error_from_counts(spec, result.side_counts);

    const AffineMap2 advance = rotation_map(spec);
    Eigen::Matrix2d to_side = Eigen::Matrix2d::Identity();
    result.points.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < result.side_counts.size(); ++i) {
        const std::vector<Point2> base = base_side_points(spec, result.side_counts[i]);
        // Each side's last point is the next side's first vertex; emitting all
        // but the last keeps every vertex exactly once without float compares.
        for (std::size_t j = 0; j + 1 < base.size(); ++j) {
            result.points.push_back(to_side * base[j]);
        }
        to_side = advance.mat * to_side;
    }
    return result;
}

double polygon_error_mk(const PolygonSpec& spec, std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("lattice error requires k >= 1");
    }
    const double s = std::sin(kPi / spec.m);
    return s * s / (3.0 * static_cast<double>(k) * static_cast<double>(k));
}

double polygon_coefficient(const PolygonSpec& spec) {
    const double s = std::sin(kPi / spec.m);
    return spec.m * spec.m * s * s / 3.0;
}

}  // namespace cq
