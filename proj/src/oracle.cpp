#include "cq/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "cq/allocate.hpp"
#include "cq/errors.hpp"

namespace cq {

Rational exact_distortion(const SegmentProblem& problem, const std::vector<Rational>& points) {
    if (points.empty()) {
        throw std::invalid_argument("distortion of an empty quantizer");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < problem.a || problem.b < points[i]) {
            throw std::invalid_argument("quantizer point " + points[i].to_string() +
                                        " outside the support");
        }
        if (i > 0 && !(points[i - 1] < points[i])) {
            throw std::invalid_argument("quantizer points must be strictly increasing");
        }
    }
    if (!std::includes(points.begin(), points.end(), problem.beta.begin(), problem.beta.end())) {
        throw std::invalid_argument("quantizer must contain every conditional point");
    }

    const Rational half(1, 2);
    Rational acc(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational left = i == 0 ? problem.a : (points[i - 1] + points[i]) * half;
        const Rational right = i + 1 == points.size() ? problem.b : (points[i] + points[i + 1]) * half;
        const Rational r = right - points[i];
        const Rational l = points[i] - left;
        acc += r * r * r + l * l * l;
    }
    return acc / (Rational(3) * problem.support_length());
}

double float_distortion(double a, double b, const std::vector<double>& sites) {
    double acc = 0.0;
    const std::size_t n = sites.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i == 0 ? a : 0.5 * (sites[i - 1] + sites[i]);
        const double right = i + 1 == n ? b : 0.5 * (sites[i] + sites[i + 1]);
        const double r = right - sites[i];
        const double l = sites[i] - left;
        acc += r * r * r + l * l * l;
    }
    return acc / (3.0 * (b - a));
}

namespace {

struct LloydConfig {
    std::vector<double> positions;
    std::vector<char> frozen;
};

void check_allocation(const std::vector<SubInterval>& parts, const Allocation& allocation,
                      std::int64_t* total_points) {
    if (allocation.counts.size() != parts.size()) {
        throw std::invalid_argument("allocation size does not match the partition");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (allocation.counts[i] < min_count(parts[i].kind)) {
            throw std::invalid_argument("allocation count below minimum for subinterval " +
                                        std::to_string(parts[i].index));
        }
        total += allocation.counts[i];
    }
    *total_points = total - static_cast<std::int64_t>(parts.size() - 1);
}

// Conditional points of one subinterval that the assembly is responsible for:
// the first subinterval owns both of its fixed endpoints, later ones only
// their upper endpoint (the lower one belongs to the previous subinterval).
std::int64_t free_count(const SubInterval& sub, std::int64_t count) {
    return count - (sub.kind == IntervalKind::BothFixed ? 2 : 1);
}

LloydConfig random_config(const SegmentProblem& problem, const Allocation& allocation,
                          std::uint64_t seed) {
    const std::vector<SubInterval> parts = partition(problem);
    std::int64_t n = 0;
    check_allocation(parts, allocation, &n);

    std::mt19937_64 rng(seed);
    LloydConfig config;
    config.positions.reserve(static_cast<std::size_t>(n));
    config.frozen.reserve(static_cast<std::size_t>(n));

    for (std::size_t i = 0; i < parts.size(); ++i) {
        const SubInterval& sub = parts[i];
        if (i == 0 && sub.kind != IntervalKind::LeftFree) {
            config.positions.push_back(sub.lo.to_double());
            config.frozen.push_back(1);
        }
        std::vector<double> draws(static_cast<std::size_t>(free_count(sub, allocation.counts[i])));
        std::uniform_real_distribution<double> dist(sub.lo.to_double(), sub.hi.to_double());
        for (double& d : draws) d = dist(rng);
        std::sort(draws.begin(), draws.end());
        for (const double d : draws) {
            config.positions.push_back(d);
            config.frozen.push_back(0);
        }
        if (sub.kind != IntervalKind::RightFree) {
            config.positions.push_back(sub.hi.to_double());
            config.frozen.push_back(1);
        }
    }
    return config;
}

LloydResult lloyd_run(const SegmentProblem& problem, LloydConfig config, double tol,
                      int max_iter) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("lloyd tolerance must be positive");
    }
    const double a = problem.a.to_double();
    const double b = problem.b.to_double();
    std::vector<double>& pos = config.positions;
    std::vector<double> next = pos;

    LloydResult result;
    result.converged = false;
    result.iterations = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        double max_move = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (config.frozen[i]) continue;
            const double left = i == 0 ? a : 0.5 * (pos[i - 1] + pos[i]);
            const double right = i + 1 == pos.size() ? b : 0.5 * (pos[i] + pos[i + 1]);
            next[i] = 0.5 * (left + right);
            max_move = std::max(max_move, std::abs(next[i] - pos[i]));
        }
        pos.swap(next);
        result.iterations = iter;
        if (max_move < tol) {
            result.converged = true;
            break;
        }
    }
    result.points = std::move(pos);
    result.error = float_distortion(a, b, result.points);
    return result;
}

}  // namespace

LloydResult lloyd_conditional(const SegmentProblem& problem, const Allocation& allocation,
                              std::uint64_t seed, double tol, int max_iter) {
    return lloyd_run(problem, random_config(problem, allocation, seed), tol, max_iter);
}

LloydResult lloyd_conditional_from(const SegmentProblem& problem, const Allocation& allocation,
                                   const std::vector<double>& initial, double tol, int max_iter) {
    const std::vector<SubInterval> parts = partition(problem);
    std::int64_t n = 0;
    check_allocation(parts, allocation, &n);
    if (static_cast<std::int64_t>(initial.size()) != n) {
        throw std::invalid_argument("initial configuration has " + std::to_string(initial.size()) +
                                    " points, expected " + std::to_string(n));
    }
    LloydConfig config;
    config.positions = initial;
    config.frozen.assign(initial.size(), 0);
    // Freeze the entries equal to conditional points; the caller passes the
    // conditional set verbatim, so exact matches are well-defined.
    for (const Rational& c : problem.beta) {
        const double value = c.to_double();
        const auto it = std::find(config.positions.begin(), config.positions.end(), value);
        if (it == config.positions.end()) {
            throw std::invalid_argument("initial configuration misses conditional point " +
                                        c.to_string());
        }
        config.frozen[static_cast<std::size_t>(it - config.positions.begin())] = 1;
    }
    return lloyd_run(problem, std::move(config), tol, max_iter);
}

namespace {

// Distortion of beta plus up to three extra sites, merged on the fly.
double merged_distortion(double a, double b, const std::vector<double>& beta,
                         const double* extra, std::size_t extra_n,
                         std::vector<double>& buffer) {
    buffer.clear();
    std::merge(beta.begin(), beta.end(), extra, extra + extra_n, std::back_inserter(buffer));
    return float_distortion(a, b, buffer);
}

}  // namespace

GridSearchResult grid_search_free_points(const SegmentProblem& problem, std::int64_t n,
                                         double coarse_step, double refine_to) {
    const std::int64_t q = n - static_cast<std::int64_t>(problem.beta.size());
    if (q < 0 || q > 3) {
        throw std::invalid_argument("grid search supports 0..3 free points (got " +
                                    std::to_string(q) + ")");
    }
    const double a = problem.a.to_double();
    const double b = problem.b.to_double();
    const double len = b - a;

    std::vector<double> beta_d;
    beta_d.reserve(problem.beta.size());
    for (const Rational& c : problem.beta) beta_d.push_back(c.to_double());

    std::vector<double> buffer;
    buffer.reserve(beta_d.size() + 3);

    if (q == 0) {
        return GridSearchResult{{}, float_distortion(a, b, beta_d)};
    }

    const auto evaluate = [&](std::array<double, 3>& tuple, std::size_t count) {
        std::sort(tuple.begin(), tuple.begin() + count);
        return merged_distortion(a, b, beta_d, tuple.data(), count, buffer);
    };

    // Dense pass: sorted tuples on the uniform grid.
    const std::int64_t cells = std::max<std::int64_t>(1, std::llround(1.0 / coarse_step));
    {
        double est = 1.0;  // sorted tuples: C(cells + 1, q)
        for (std::int64_t i = 0; i < q; ++i) {
            est *= static_cast<double>(cells + 1 - i) / static_cast<double>(i + 1);
        }
        if (est > 5e8) {
            throw std::invalid_argument("grid search would evaluate too many tuples; "
                                        "use a coarser step");
        }
    }
    const auto grid_at = [&](std::int64_t t) { return a + len * static_cast<double>(t) /
                                                      static_cast<double>(cells); };

    std::array<double, 3> best_tuple{};
    double best_error = std::numeric_limits<double>::infinity();
    std::array<double, 3> tuple{};
    for (std::int64_t t1 = 0; t1 <= cells; ++t1) {
        tuple[0] = grid_at(t1);
        if (q == 1) {
            const double e = merged_distortion(a, b, beta_d, tuple.data(), 1, buffer);
            if (e < best_error) { best_error = e; best_tuple = tuple; }
            continue;
        }
        for (std::int64_t t2 = t1 + 1; t2 <= cells; ++t2) {
            tuple[1] = grid_at(t2);
            if (q == 2) {
                const double e = merged_distortion(a, b, beta_d, tuple.data(), 2, buffer);
                if (e < best_error) { best_error = e; best_tuple = tuple; }
                continue;
            }
            for (std::int64_t t3 = t2 + 1; t3 <= cells; ++t3) {
                tuple[2] = grid_at(t3);
                const double e = merged_distortion(a, b, beta_d, tuple.data(), 3, buffer);
                if (e < best_error) { best_error = e; best_tuple = tuple; }
            }
        }
    }

    // Local refinement: shrink the step tenfold per level, rescanning a
    // +/- 10-step window around the incumbent in every coordinate.
    const auto refine = [&](std::array<double, 3> center, double start_step) {
        std::array<double, 3> incumbent = center;
        std::sort(incumbent.begin(), incumbent.begin() + static_cast<std::ptrdiff_t>(q));
        double incumbent_error = evaluate(incumbent, static_cast<std::size_t>(q));
        for (double step = start_step; step >= refine_to * len * 0.999; step /= 10.0) {
            std::array<double, 3> base = incumbent;
            std::array<std::int64_t, 3> offset{};
            const std::int64_t w = 10;
            for (offset[0] = -w; offset[0] <= w; ++offset[0]) {
                for (offset[1] = q > 1 ? -w : 0; offset[1] <= (q > 1 ? w : 0); ++offset[1]) {
                    for (offset[2] = q > 2 ? -w : 0; offset[2] <= (q > 2 ? w : 0); ++offset[2]) {
                        std::array<double, 3> cand{};
                        for (std::size_t i = 0; i < static_cast<std::size_t>(q); ++i) {
                            cand[i] = std::clamp(base[i] + step * static_cast<double>(offset[i]),
                                                 a, b);
                        }
                        const double e = evaluate(cand, static_cast<std::size_t>(q));
                        if (e < incumbent_error) {
                            incumbent_error = e;
                            incumbent = cand;
                        }
                    }
                }
            }
        }
        return std::pair<std::array<double, 3>, double>(incumbent, incumbent_error);
    };

    auto [dense_tuple, dense_error] = refine(best_tuple, coarse_step * len / 10.0);

    // Second refinement seeded at the closed-form optimum, so the fine-step
    // probe always runs in the claimed optimum's neighborhood.
    const std::vector<SubInterval> parts = partition(problem);
    const QuantizerResult closed = conditional_quantizer(problem, n, allocate_greedy(parts, n));
    std::array<double, 3> closed_free{};
    std::size_t idx = 0;
    for (const Rational& p : closed.points) {
        if (!std::binary_search(problem.beta.begin(), problem.beta.end(), p)) {
            closed_free[idx++] = p.to_double();
        }
    }
    auto [cf_tuple, cf_error] = refine(closed_free, coarse_step * len / 10.0);

    const bool dense_wins = dense_error <= cf_error;
    const auto& final_tuple = dense_wins ? dense_tuple : cf_tuple;
    GridSearchResult result;
    result.error = dense_wins ? dense_error : cf_error;
    result.free_points.assign(final_tuple.begin(), final_tuple.begin() + static_cast<std::ptrdiff_t>(q));
    return result;
}

double boundary_discretization_error(const PolygonSpec& spec, const std::vector<Point2>& points,
                                     std::int64_t samples) {
    if (points.empty()) {
        throw std::invalid_argument("discretization of an empty quantizer");
    }
    if (samples < 10000) {
        throw std::invalid_argument("discretization requires at least 1e4 samples");
    }
    std::vector<double> px(points.size()), py(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        px[i] = points[i].x();
        py[i] = points[i].y();
    }

    const std::vector<Point2> verts = vertices(spec);
    const double side = spec.side_length();
    const double total_len = side * spec.m;

    double acc = 0.0;
    for (std::int64_t s = 0; s < samples; ++s) {
        const double t = (static_cast<double>(s) + 0.5) * total_len / static_cast<double>(samples);
        const int i = std::min(static_cast<int>(t / side), spec.m - 1);
        const double u = t - i * side;
        const Point2& v0 = verts[static_cast<std::size_t>(i)];
        const Point2& v1 = verts[static_cast<std::size_t>((i + 1) % spec.m)];
        const double frac = u / side;
        const double x = v0.x() + frac * (v1.x() - v0.x());
        const double y = v0.y() + frac * (v1.y() - v0.y());

        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < px.size(); ++j) {
            const double dx = x - px[j];
            const double dy = y - py[j];
            best = std::min(best, dx * dx + dy * dy);
        }
        acc += best;
    }
    return acc / static_cast<double>(samples);
}

}  // namespace cq
