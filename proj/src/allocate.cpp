#include "cq/allocate.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "cq/errors.hpp"

namespace cq {

namespace {

void require_feasible_total(const std::vector<SubInterval>& parts, std::int64_t n) {
    const std::int64_t n_min = minimal_feasible_n(parts);
    if (n < n_min) {
        throw infeasible_error("n=" + std::to_string(n) + " infeasible; minimal feasible n is " +
                               std::to_string(n_min));
    }
}

// Error decrease from granting one more point to `sub` at current count c.
Rational marginal_gain(const SubInterval& sub, const Rational& support, std::int64_t c) {
    return sub_error(sub, c, support) - sub_error(sub, c + 1, support);
}

struct GreedyEntry {
    Rational gain;
    std::size_t idx;
};

struct GreedyEntryLess {
    // Max-heap on gain; on ties the lowest subinterval index wins.
    bool operator()(const GreedyEntry& a, const GreedyEntry& b) const {
        const auto cmp = a.gain <=> b.gain;
        if (cmp != 0) return cmp < 0;
        return a.idx > b.idx;
    }
};

class GreedyState {
public:
    GreedyState(const std::vector<SubInterval>& parts, std::int64_t n)
        : parts_(parts), support_(parts.back().hi - parts.front().lo), n_(n) {
        counts_.reserve(parts.size());
        error_ = Rational(0);
        for (const auto& sub : parts_) {
            const std::int64_t c = min_count(sub.kind);
            counts_.push_back(c);
            error_ += sub_error(sub, c, support_);
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            heap_.push(GreedyEntry{marginal_gain(parts_[i], support_, counts_[i]), i});
        }
    }

    // Grants one point to the best subinterval; keeps the exact running error.
    void step() {
        GreedyEntry best = heap_.top();
        heap_.pop();
        counts_[best.idx] += 1;
        error_ -= best.gain;
        n_ += 1;
        heap_.push(GreedyEntry{marginal_gain(parts_[best.idx], support_, counts_[best.idx]),
                               best.idx});
    }

    std::int64_t n() const { return n_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    const Rational& error() const { return error_; }

private:
    const std::vector<SubInterval>& parts_;
    Rational support_;
    std::int64_t n_;
    std::vector<std::int64_t> counts_;
    Rational error_;
    std::priority_queue<GreedyEntry, std::vector<GreedyEntry>, GreedyEntryLess> heap_;
};

}  // namespace

Allocation allocate_greedy(const std::vector<SubInterval>& parts, std::int64_t n) {
    require_feasible_total(parts, n);
    GreedyState state(parts, minimal_feasible_n(parts));
    while (state.n() < n) state.step();
    return Allocation{state.counts()};
}

std::vector<SweepRow> greedy_sweep(const std::vector<SubInterval>& parts, std::int64_t n_max) {
    require_feasible_total(parts, n_max);
    GreedyState state(parts, minimal_feasible_n(parts));
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - state.n() + 1));
    rows.push_back(SweepRow{state.n(), Allocation{state.counts()}, state.error()});
    while (state.n() < n_max) {
        state.step();
        rows.push_back(SweepRow{state.n(), Allocation{state.counts()}, state.error()});
    }
    return rows;
}

Allocation allocate_exhaustive(const std::vector<SubInterval>& parts, std::int64_t n) {
    require_feasible_total(parts, n);
    const std::size_t p = parts.size();
    const Rational support = parts.back().hi - parts.front().lo;

    std::vector<std::int64_t> mins(p);
    std::int64_t min_total = 0;
    for (std::size_t i = 0; i < p; ++i) {
        mins[i] = min_count(parts[i].kind);
        min_total += mins[i];
    }
    const std::int64_t extra = n + static_cast<std::int64_t>(p - 1) - min_total;

    // Candidate count: compositions of `extra` over p subintervals.
    BigInt candidates = 1;
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(p); ++i) {
        candidates = candidates * (extra + i) / i;
    }
    if (candidates > 1000000) {
        throw std::invalid_argument("exhaustive allocation search over " + candidates.str() +
                                    " compositions exceeds the 1e6 cap");
    }

    // All candidate errors are compared as integers scaled by the common
    // denominator of every reachable per-interval error, keeping the argmin
    // exact without per-node rational arithmetic.
    std::vector<std::vector<Rational>> err(p);
    BigInt common_den = 1;
    for (std::size_t i = 0; i < p; ++i) {
        err[i].reserve(static_cast<std::size_t>(extra) + 1);
        for (std::int64_t e = 0; e <= extra; ++e) {
            err[i].push_back(sub_error(parts[i], mins[i] + e, support));
            common_den = boost::multiprecision::lcm(common_den, err[i].back().den());
        }
    }
    std::vector<std::vector<BigInt>> weight(p);
    for (std::size_t i = 0; i < p; ++i) {
        weight[i].reserve(err[i].size());
        for (const auto& r : err[i]) {
            weight[i].push_back(r.num() * (common_den / r.den()));
        }
    }
    // Lower bound on the remaining suffix: every later subinterval at its
    // cheapest reachable error.
    std::vector<BigInt> suffix_bound(p + 1, BigInt(0));
    for (std::size_t i = p; i-- > 0;) {
        suffix_bound[i] = suffix_bound[i + 1] + weight[i][static_cast<std::size_t>(extra)];
    }

    std::vector<std::int64_t> current(p);
    std::vector<std::int64_t> best_counts;
    std::optional<BigInt> best_sum;

    // Depth-first over compositions in lexicographic order; the first strict
    // improvement wins, so ties resolve to the lexicographically smallest
    // counts vector.
    auto dfs = [&](auto&& self, std::size_t depth, std::int64_t remaining,
                   const BigInt& partial) -> void {
        if (best_sum && partial + suffix_bound[depth] >= *best_sum) return;
        if (depth + 1 == p) {
            current[depth] = mins[depth] + remaining;
            BigInt total = partial + weight[depth][static_cast<std::size_t>(remaining)];
            if (!best_sum || total < *best_sum) {
                best_sum = std::move(total);
                best_counts = current;
            }
            return;
        }
        for (std::int64_t e = 0; e <= remaining; ++e) {
            current[depth] = mins[depth] + e;
            self(self, depth + 1, remaining - e,
                 partial + weight[depth][static_cast<std::size_t>(e)]);
        }
    };
    dfs(dfs, 0, extra, BigInt(0));

    return Allocation{std::move(best_counts)};
}

TripleKLM closed_form_quarter_half(std::int64_t n) {
    if (n < 6) {
        throw std::out_of_range("closed-form counts require n >= 6 (got n=" + std::to_string(n) +
                                ")");
    }
    const std::int64_t x = (n - 2) / 4;
    switch (n - 4 * x) {
        case 2: return TripleKLM{x + 1, x + 2, 2 * x + 1};
        case 3: return TripleKLM{x + 1, x + 2, 2 * x + 2};
        case 4: return TripleKLM{x + 2, x + 2, 2 * x + 2};
        default: return TripleKLM{x + 2, x + 2, 2 * x + 3};  // residue 5
    }
}

Allocation closed_form_uniform_grid(std::int64_t k, std::int64_t n) {
    if (k < 1) {
        throw std::invalid_argument("uniform grid requires k >= 1");
    }
    if (n < k) {
        throw infeasible_error("n=" + std::to_string(n) + " infeasible; minimal feasible n is " +
                               std::to_string(k));
    }
    const std::int64_t m = n / k;
    const std::int64_t l = n % k;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k), m + 1);
    if (l == 0) {
        counts[0] = m;
    } else {
        counts[0] = m + 1;
        for (std::int64_t j = 1; j < l; ++j) {
            counts[static_cast<std::size_t>(j)] = m + 2;
        }
    }
    return Allocation{std::move(counts)};
}

}  // namespace cq
