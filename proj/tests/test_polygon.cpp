#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cq/errors.hpp"
#include "cq/polygon.hpp"

using namespace cq;

namespace {

constexpr double kPi = std::numbers::pi;

// Distance from p to the segment [u, v].
double segment_distance(const Point2& p, const Point2& u, const Point2& v) {
    const Point2 d = v - u;
    const double t = std::clamp((p - u).dot(d) / d.squaredNorm(), 0.0, 1.0);
    return (p - (u + t * d)).norm();
}

double boundary_distance(const PolygonSpec& spec, const Point2& p) {
    const auto verts = vertices(spec);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.m; ++i) {
        best = std::min(best, segment_distance(p, verts[static_cast<std::size_t>(i)],
                                               verts[static_cast<std::size_t>((i + 1) % spec.m)]));
    }
    return best;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(PolygonSpec(2), std::invalid_argument);
    CHECK(PolygonSpec(3).m == 3);
}

TEST_CASE("vertices of the square and hexagon") {
    const auto square = vertices(PolygonSpec(4));
    const double h = std::sqrt(2.0) / 2.0;
    CHECK(square[0].x() == doctest::Approx(-h).epsilon(1e-14));
    CHECK(square[0].y() == doctest::Approx(-h).epsilon(1e-14));
    CHECK(square[1].x() == doctest::Approx(h).epsilon(1e-14));
    CHECK(square[1].y() == doctest::Approx(-h).epsilon(1e-14));

    const auto hexagon = vertices(PolygonSpec(6));
    CHECK(hexagon[0].x() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(hexagon[0].y() == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("vertices lie on the unit circle, sides have the closed-form length") {
    for (int m = 3; m <= 20; ++m) {
        const PolygonSpec spec(m);
        const auto verts = vertices(spec);
        REQUIRE(verts.size() == static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            CHECK(std::abs(verts[static_cast<std::size_t>(j)].norm() - 1.0) <= 1e-12);
            const Point2 edge = verts[static_cast<std::size_t>((j + 1) % m)] -
                                verts[static_cast<std::size_t>(j)];
            CHECK(edge.norm() == doctest::Approx(spec.side_length()).epsilon(1e-12));
        }
    }
}

TEST_CASE("side-advancing map equals the rotation by the central angle") {
    for (int m = 3; m <= 64; ++m) {
        const PolygonSpec spec(m);
        const AffineMap2 map = rotation_map(spec);
        const double theta = spec.central_angle();
        CHECK(std::abs(map.mat(0, 0) - std::cos(theta)) <= 1e-12);
        CHECK(std::abs(map.mat(0, 1) + std::sin(theta)) <= 1e-12);
        CHECK(std::abs(map.mat(1, 0) - std::sin(theta)) <= 1e-12);
        CHECK(std::abs(map.mat(1, 1) - std::cos(theta)) <= 1e-12);

        const AffineMap2 full_turn = map.power(m);
        CHECK((full_turn.mat - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("map sends the first vertex to the second") {
    const PolygonSpec spec(4);
    const auto verts = vertices(spec);
    const Point2 image = rotation_map(spec)(verts[0]);
    CHECK((image - verts[1]).norm() <= 1e-12);
}

TEST_CASE("the map is an isometry") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int m : {3, 5, 8, 13}) {
        const AffineMap2 map = rotation_map(PolygonSpec(m));
        CHECK(std::abs(map.mat.determinant() - 1.0) <= 1e-12);
        CHECK((map.mat.transpose() * map.mat - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <=
              1e-12);
        for (int trial = 0; trial < 50; ++trial) {
            const Point2 p(coord(rng), coord(rng));
            const Point2 q(coord(rng), coord(rng));
            CHECK(std::abs((map(p) - map(q)).norm() - (p - q).norm()) <= 1e-12);
        }
    }
}

TEST_CASE("cyclic action on sides") {
    for (int m = 3; m <= 12; ++m) {
        const PolygonSpec spec(m);
        const auto verts = vertices(spec);
        const AffineMap2 map = rotation_map(spec);
        for (int i = 1; i <= m; ++i) {
            const AffineMap2 shift = map.power(i - 1);
            CHECK((shift(verts[0]) - verts[static_cast<std::size_t>((i - 1) % m)]).norm() <= 1e-10);
            CHECK((shift(verts[1]) - verts[static_cast<std::size_t>(i % m)]).norm() <= 1e-10);
        }
    }
}

TEST_CASE("base side points") {
    const PolygonSpec square(4);
    const auto verts = vertices(square);

    const auto two = base_side_points(square, 2);
    CHECK((two[0] - verts[0]).norm() <= 1e-15);
    CHECK((two[1] - verts[1]).norm() <= 1e-15);

    const auto three = base_side_points(square, 3);
    CHECK(three[1].x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(three[1].y() == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));

    const auto five = base_side_points(PolygonSpec(3), 5);
    const double gap = PolygonSpec(3).side_length() / 4.0;
    for (std::size_t j = 1; j < five.size(); ++j) {
        CHECK((five[j] - five[j - 1]).norm() == doctest::Approx(gap).epsilon(1e-13));
    }

    CHECK_THROWS_AS(base_side_points(square, 1), infeasible_error);
}

TEST_CASE("side error closed form") {
    CHECK(side_error(PolygonSpec(4), 2) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(side_error(PolygonSpec(3), 3) == doctest::Approx(1.0 / 48.0).epsilon(1e-15));
    double prev = side_error(PolygonSpec(5), 2);
    for (std::int64_t n1 = 3; n1 <= 40; ++n1) {
        const double next = side_error(PolygonSpec(5), n1);
        CHECK(next < prev);
        prev = next;
    }
    CHECK(side_error(PolygonSpec(5), 4000) < 1e-8);
}

TEST_CASE("side counts") {
    CHECK(polygon_side_counts(PolygonSpec(3), 7) == std::vector<std::int64_t>{4, 3, 3});
    CHECK(polygon_side_counts(PolygonSpec(4), 8) == std::vector<std::int64_t>{3, 3, 3, 3});
    for (int m : {3, 5, 8}) {
        for (std::int64_t n = m; n <= 4 * m + 2; ++n) {
            const auto counts = polygon_side_counts(PolygonSpec(m), n);
            std::int64_t total = 0;
            for (auto c : counts) total += c;
            CHECK(total == n + m);
        }
    }
    CHECK_THROWS_AS(polygon_side_counts(PolygonSpec(5), 4), infeasible_error);
}

TEST_CASE("polygon quantizer") {
    SUBCASE("square with 8 points") {
        const auto q = polygon_quantizer(PolygonSpec(4), 8);
        CHECK(q.points.size() == 8);
        CHECK(q.error == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    }
    SUBCASE("pentagon at minimal n is the vertex set") {
        const auto q = polygon_quantizer(PolygonSpec(5), 5);
        REQUIRE(q.points.size() == 5);
        const auto verts = vertices(PolygonSpec(5));
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK((q.points[j] - verts[j]).norm() <= 1e-12);
        }
        CHECK(q.error ==
              doctest::Approx(std::pow(std::sin(kPi / 5), 2) / 3.0).epsilon(1e-14));
    }
    SUBCASE("triangle with 7 points") {
        const auto q = polygon_quantizer(PolygonSpec(3), 7);
        CHECK(q.side_counts == std::vector<std::int64_t>{4, 3, 3});
        CHECK(q.points.size() == 7);
    }
    SUBCASE("cardinality and boundary membership over a sweep") {
        for (int m : {3, 4, 6}) {
            const PolygonSpec spec(m);
            for (std::int64_t n = m; n <= 3 * m + 2; ++n) {
                const auto q = polygon_quantizer(spec, n);
                CHECK(q.points.size() == static_cast<std::size_t>(n));
                for (const auto& p : q.points) {
                    CHECK(boundary_distance(spec, p) <= 1e-12);
                }
            }
        }
    }
    SUBCASE("infeasible n") {
        CHECK_THROWS_AS(polygon_quantizer(PolygonSpec(4), 3), infeasible_error);
    }
}

TEST_CASE("lattice error and coefficient") {
    CHECK(polygon_error_mk(PolygonSpec(6), 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(polygon_error_mk(PolygonSpec(4), 10) == doctest::Approx(1.0 / 600.0).epsilon(1e-15));
    for (int m : {3, 5, 9}) {
        for (std::int64_t k : {1, 2, 7}) {
            CHECK(polygon_quantizer(PolygonSpec(m), m * k).error ==
                  doctest::Approx(polygon_error_mk(PolygonSpec(m), k)).epsilon(1e-12));
        }
    }

    CHECK(polygon_coefficient(PolygonSpec(3)) == doctest::Approx(9.0 / 4.0).epsilon(1e-15));
    CHECK(polygon_coefficient(PolygonSpec(4)) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    double prev = polygon_coefficient(PolygonSpec(3));
    for (int m = 4; m <= 50; ++m) {
        const double next = polygon_coefficient(PolygonSpec(m));
        CHECK(next > prev);
        prev = next;
    }
    CHECK(std::abs(polygon_coefficient(PolygonSpec(1000000)) - kPi * kPi / 3.0) <= 1e-9);
}

TEST_CASE("optimal side counts are balanced (exhaustive cross-check)") {
    // Enumerate all count vectors with entries >= 2 summing to n + m and
    // compare against the closed-form choice.
    for (int m : {3, 4, 5}) {
        const PolygonSpec spec(m);
        for (std::int64_t n = m; n <= 20; ++n) {
            const std::int64_t total = n + m;
            std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 2);
            double best = std::numeric_limits<double>::infinity();
            std::vector<std::vector<std::int64_t>> near_optimal;

            const auto consider = [&](const std::vector<std::int64_t>& c) {
                const double e = polygon_error_from_counts(spec, c);
                if (e < best * (1.0 - 1e-9)) {
                    best = e;
                    near_optimal.clear();
                }
                if (e <= best * (1.0 + 1e-9)) near_optimal.push_back(c);
            };
            const auto enumerate = [&](auto&& self, std::size_t idx, std::int64_t remaining) -> void {
                if (idx + 1 == counts.size()) {
                    if (remaining >= 2) {
                        counts[idx] = remaining;
                        consider(counts);
                    }
                    return;
                }
                for (std::int64_t c = 2; c <= remaining; ++c) {
                    counts[idx] = c;
                    self(self, idx + 1, remaining - c);
                }
            };
            enumerate(enumerate, 0, total);

            for (const auto& c : near_optimal) {
                for (std::size_t i = 0; i < c.size(); ++i) {
                    for (std::size_t j = i + 1; j < c.size(); ++j) {
                        CHECK(std::abs(c[i] - c[j]) <= 1);
                    }
                }
            }
            const double closed = polygon_error_from_counts(spec, polygon_side_counts(spec, n));
            CHECK(closed == doctest::Approx(best).epsilon(1e-12));
        }
    }
}

TEST_CASE("scaled error converges to the coefficient") {
    for (int m : {3, 4, 7}) {
        const PolygonSpec spec(m);
        const double coeff = polygon_coefficient(spec);
        // Identity on the lattice.
        for (std::int64_t k : {1, 10, 100}) {
            const double n = static_cast<double>(m) * static_cast<double>(k);
            CHECK(std::abs(n * n * polygon_error_mk(spec, k) - coeff) <= 1e-12);
        }
        // Off-lattice within 1% once n >= 100 m.
        for (std::int64_t n = 100 * m; n <= 102 * m; ++n) {
            const double v = polygon_error_from_counts(spec, polygon_side_counts(spec, n));
            const double scaled = static_cast<double>(n) * static_cast<double>(n) * v;
            CHECK(std::abs(scaled / coeff - 1.0) <= 0.01);
        }
    }
}
