#include "cq/segment.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cq/errors.hpp"

namespace cq {

SegmentProblem::SegmentProblem(Rational a_, Rational b_, std::vector<Rational> beta_)
    : a(std::move(a_)), b(std::move(b_)), beta(std::move(beta_)) {
    if (!(a < b)) {
        throw std::invalid_argument("support interval requires a < b");
    }
    if (beta.empty()) {
        throw std::invalid_argument("conditional set must be nonempty");
    }
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < a || b < beta[i]) {
            throw std::invalid_argument("conditional point " + beta[i].to_string() +
                                        " outside the support interval");
        }
        if (i > 0 && !(beta[i - 1] < beta[i])) {
            throw std::invalid_argument("conditional set must be strictly increasing "
                                        "(duplicate or unsorted point " + beta[i].to_string() + ")");
        }
    }
}

std::vector<SubInterval> partition(const SegmentProblem& problem) {
    std::vector<Rational> breakpoints;
    breakpoints.reserve(problem.beta.size() + 2);
    if (problem.beta.front() != problem.a) breakpoints.push_back(problem.a);
    breakpoints.insert(breakpoints.end(), problem.beta.begin(), problem.beta.end());
    if (problem.beta.back() != problem.b) breakpoints.push_back(problem.b);

    const bool left_free = problem.beta.front() != problem.a;
    const bool right_free = problem.beta.back() != problem.b;

    std::vector<SubInterval> parts;
    parts.reserve(breakpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        IntervalKind kind = IntervalKind::BothFixed;
        if (i == 0 && left_free) kind = IntervalKind::LeftFree;
        if (i + 2 == breakpoints.size() && right_free) kind = IntervalKind::RightFree;
        parts.push_back(SubInterval{breakpoints[i], breakpoints[i + 1], kind,
                                    static_cast<int>(i) + 1});
    }
    return parts;
}

std::int64_t minimal_feasible_n(const std::vector<SubInterval>& parts) {
    std::int64_t total = 0;
    for (const auto& sub : parts) total += min_count(sub.kind);
    // Interior breakpoints are conditional points counted once per side.
    return total - static_cast<std::int64_t>(parts.size() - 1);
}

namespace {

void require_feasible_count(const SubInterval& sub, std::int64_t count) {
    const std::int64_t lo = min_count(sub.kind);
    if (count < lo) {
        throw infeasible_error("count " + std::to_string(count) + " below minimum " +
                               std::to_string(lo) + " for subinterval " +
                               std::to_string(sub.index));
    }
}

}  // namespace

std::vector<Rational> place_points(const SubInterval& sub, std::int64_t count) {
    require_feasible_count(sub, count);
    const Rational len = sub.length();
    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(count));
    switch (sub.kind) {
        case IntervalKind::LeftFree: {
            const Rational step = len / Rational(2 * count - 1);
            for (std::int64_t j = 1; j <= count; ++j) {
                points.push_back(sub.lo + Rational(2 * j - 1) * step);
            }
            break;
        }
        case IntervalKind::BothFixed: {
            const Rational step = len / Rational(count - 1);
            for (std::int64_t j = 1; j <= count; ++j) {
                points.push_back(sub.lo + Rational(j - 1) * step);
            }
            break;
        }
        case IntervalKind::RightFree: {
            const Rational step = len / Rational(2 * count - 1);
            for (std::int64_t j = 1; j <= count; ++j) {
                points.push_back(sub.lo + Rational(2 * (j - 1)) * step);
            }
            break;
        }
    }
    return points;
}

Rational sub_error(const SubInterval& sub, std::int64_t count, const Rational& support_length) {
    require_feasible_count(sub, count);
    const Rational len = sub.length();
    const Rational cube = len * len * len;
    if (sub.kind == IntervalKind::BothFixed) {
        const Rational d(count - 1);
        return cube / (Rational(12) * support_length * d * d);
    }
    const Rational d(2 * count - 1);
    return cube / (Rational(3) * support_length * d * d);
}

QuantizerResult conditional_quantizer(const SegmentProblem& problem, std::int64_t n,
                                      const Allocation& allocation) {
    const std::vector<SubInterval> parts = partition(problem);
    if (allocation.counts.size() != parts.size()) {
        throw std::invalid_argument("allocation has " + std::to_string(allocation.counts.size()) +
                                    " counts for " + std::to_string(parts.size()) +
                                    " subintervals");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (allocation.counts[i] < min_count(parts[i].kind)) {
            throw std::invalid_argument("allocation count " +
                                        std::to_string(allocation.counts[i]) +
                                        " below minimum for subinterval " +
                                        std::to_string(parts[i].index));
        }
        total += allocation.counts[i];
    }
    const std::int64_t shared = static_cast<std::int64_t>(parts.size() - 1);
    if (total != n + shared) {
        throw std::invalid_argument("allocation totals " + std::to_string(total) +
                                    " points but n=" + std::to_string(n) + " requires " +
                                    std::to_string(n + shared) +
                                    " (shared conditional points counted twice)");
    }

    const Rational support = problem.support_length();
    QuantizerResult result;
    result.allocation = allocation;
    result.error = Rational(0);
    result.points.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Rational> placed = place_points(parts[i], allocation.counts[i]);
        // Every subinterval after the first starts at the previous one's last
        // point (a shared conditional point), so drop it instead of comparing.
        const std::size_t first = i == 0 ? 0 : 1;
        for (std::size_t j = first; j < placed.size(); ++j) {
            result.points.push_back(std::move(placed[j]));
        }
        result.error += sub_error(parts[i], allocation.counts[i], support);
    }
    return result;
}

}  // namespace cq
