#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "cq/allocate.hpp"
#include "cq/errors.hpp"
#include "cq/rational.hpp"
#include "cq/segment.hpp"

using namespace cq;

namespace {

Rational R(long long p, long long q) { return Rational(p, q); }

SegmentProblem quarter_half() {
    return SegmentProblem(0, 1, {R(1, 4), R(1, 2)});
}

SegmentProblem uniform_grid(int k) {
    std::vector<Rational> beta;
    for (int j = 1; j <= k; ++j) beta.push_back(R(j, k));
    return SegmentProblem(0, 1, beta);
}

Rational total_error(const std::vector<SubInterval>& parts, const Allocation& alloc) {
    const Rational support = parts.back().hi - parts.front().lo;
    Rational total(0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        total += sub_error(parts[i], alloc.counts[i], support);
    }
    return total;
}

}  // namespace

TEST_CASE("exhaustive allocation on the quarter-half problem") {
    const auto parts = partition(quarter_half());
    CHECK(allocate_exhaustive(parts, 2).counts == std::vector<std::int64_t>{1, 2, 1});
    CHECK(allocate_exhaustive(parts, 3).counts == std::vector<std::int64_t>{1, 2, 2});
    CHECK(allocate_exhaustive(parts, 6).counts == std::vector<std::int64_t>{2, 3, 3});
}

TEST_CASE("infeasible totals name the minimal feasible n") {
    const auto parts = partition(quarter_half());
    CHECK_THROWS_WITH_AS(allocate_exhaustive(parts, 1),
                         "n=1 infeasible; minimal feasible n is 2", infeasible_error);
    CHECK_THROWS_AS(allocate_greedy(parts, 1), infeasible_error);
    CHECK_THROWS_AS(greedy_sweep(parts, 0), infeasible_error);
}

TEST_CASE("greedy reproduces the 59-point optimum") {
    const auto parts = partition(quarter_half());
    const Allocation alloc = allocate_greedy(parts, 59);
    CHECK(alloc.counts == std::vector<std::int64_t>{15, 16, 30});
    CHECK(total_error(parts, alloc) == Rational(BigInt("12115621"), BigInt("505875628800")));
}

TEST_CASE("greedy on the uniform grid") {
    const auto parts = partition(uniform_grid(5));
    const Allocation minimal = allocate_greedy(parts, 5);
    CHECK(minimal.counts == std::vector<std::int64_t>{1, 2, 2, 2, 2});
    CHECK(total_error(parts, minimal) == R(2, 375));
}

TEST_CASE("greedy at the minimal feasible n returns the minimal counts") {
    for (int k : {2, 3, 6}) {
        const auto parts = partition(uniform_grid(k));
        const Allocation alloc = allocate_greedy(parts, k);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(alloc.counts[i] == min_count(parts[i].kind));
        }
    }
}

TEST_CASE("closed-form quarter-half triples") {
    const auto t59 = closed_form_quarter_half(59);
    CHECK(t59.k == 15);
    CHECK(t59.l == 16);
    CHECK(t59.m == 30);

    const auto t6 = closed_form_quarter_half(6);
    CHECK(t6.k == 2);
    CHECK(t6.l == 3);
    CHECK(t6.m == 3);

    const auto t9 = closed_form_quarter_half(9);
    CHECK(t9.k == 3);
    CHECK(t9.l == 3);
    CHECK(t9.m == 5);

    // The whole run of small triples.
    const std::vector<std::vector<std::int64_t>> expected = {
        {2, 3, 3}, {2, 3, 4}, {3, 3, 4}, {3, 3, 5}, {3, 4, 5},
        {3, 4, 6}, {4, 4, 6}, {4, 4, 7}, {4, 5, 7}, {4, 5, 8},
    };
    for (std::int64_t n = 6; n <= 15; ++n) {
        const auto t = closed_form_quarter_half(n);
        CHECK(std::vector<std::int64_t>{t.k, t.l, t.m} == expected[static_cast<std::size_t>(n - 6)]);
    }

    CHECK_THROWS_AS(closed_form_quarter_half(5), std::out_of_range);
}

TEST_CASE("closed-form uniform grid counts") {
    CHECK(closed_form_uniform_grid(5, 19).counts == std::vector<std::int64_t>{4, 5, 5, 5, 4});
    CHECK(closed_form_uniform_grid(5, 5).counts == std::vector<std::int64_t>{1, 2, 2, 2, 2});
    CHECK(closed_form_uniform_grid(3, 3).counts == std::vector<std::int64_t>{1, 2, 2});
    CHECK_THROWS_AS(closed_form_uniform_grid(5, 4), infeasible_error);

    const auto parts = partition(uniform_grid(5));
    CHECK(total_error(parts, closed_form_uniform_grid(5, 19)) == R(2683, 10584000));
}

TEST_CASE("greedy equals exhaustive error on small sweeps") {
    std::vector<SegmentProblem> problems{quarter_half(), uniform_grid(2), uniform_grid(3),
                                         uniform_grid(4)};
    for (const auto& problem : problems) {
        const auto parts = partition(problem);
        const std::int64_t n0 = minimal_feasible_n(parts);
        const auto sweep = greedy_sweep(parts, 25);
        for (std::int64_t n = n0; n <= 25; ++n) {
            const Allocation ex = allocate_exhaustive(parts, n);
            const Rational ex_error = total_error(parts, ex);
            const Rational greedy_error = sweep[static_cast<std::size_t>(n - n0)].error;
            CAPTURE(n);
            CHECK(ex_error == greedy_error);
        }
    }
}

TEST_CASE("closed forms match greedy errors") {
    SUBCASE("quarter-half") {
        const auto parts = partition(quarter_half());
        const auto sweep = greedy_sweep(parts, 60);
        for (std::int64_t n = 6; n <= 60; ++n) {
            const auto t = closed_form_quarter_half(n);
            const Rational closed = total_error(parts, Allocation{{t.k, t.l, t.m}});
            CHECK(closed == sweep[static_cast<std::size_t>(n - 2)].error);
        }
    }
    SUBCASE("uniform grid") {
        for (int k : {2, 3, 4, 5, 6}) {
            const auto parts = partition(uniform_grid(k));
            const auto sweep = greedy_sweep(parts, 60);
            for (std::int64_t n = k; n <= 60; ++n) {
                const Rational closed = total_error(parts, closed_form_uniform_grid(k, n));
                CHECK(closed == sweep[static_cast<std::size_t>(n - k)].error);
            }
        }
    }
}

TEST_CASE("balance of optimal uniform-grid allocations") {
    for (int k : {3, 4, 5}) {
        const auto parts = partition(uniform_grid(k));
        for (std::int64_t n = k; n <= 30; ++n) {
            const Allocation alloc = allocate_exhaustive(parts, n);
            // Interior counts pairwise within 1 of each other.
            for (std::size_t i = 1; i < alloc.counts.size(); ++i) {
                for (std::size_t j = i + 1; j < alloc.counts.size(); ++j) {
                    CHECK(std::abs(alloc.counts[i] - alloc.counts[j]) <= 1);
                }
            }
            // First count never exceeds an interior one, and lags by at most 1.
            for (std::size_t j = 1; j < alloc.counts.size(); ++j) {
                CHECK(alloc.counts[0] <= alloc.counts[j]);
                CHECK(alloc.counts[j] - alloc.counts[0] <= 1);
            }
        }
    }
}

TEST_CASE("quarter-half ratio law at n = 4x + 2") {
    const auto parts = partition(quarter_half());
    for (std::int64_t x = 1; x <= 12; ++x) {
        const Allocation alloc = allocate_greedy(parts, 4 * x + 2);
        CHECK(alloc.counts[0] - 1 == x);
        CHECK(alloc.counts[1] - 2 == x);
        CHECK(alloc.counts[2] - 1 == 2 * x);
    }
}

TEST_CASE("greedy sweep is consistent with one-shot greedy") {
    const auto parts = partition(uniform_grid(3));
    const auto sweep = greedy_sweep(parts, 20);
    CHECK(sweep.front().n == 3);
    CHECK(sweep.back().n == 20);
    for (const auto& row : sweep) {
        CHECK(allocate_greedy(parts, row.n).counts == row.allocation.counts);
        CHECK(total_error(parts, row.allocation) == row.error);
    }
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        CHECK(sweep[i].error < sweep[i - 1].error);
    }
}

TEST_CASE("exhaustive search cap") {
    const auto parts = partition(uniform_grid(8));
    CHECK_THROWS_AS(allocate_exhaustive(parts, 2000), std::invalid_argument);
}
