#include "cq/asymptotics.hpp"

#include <cmath>
#include <utility>

#include "cq/allocate.hpp"

namespace cq {

namespace {

void fill_scaled_columns(std::vector<ErrorSequencePoint>& rows) {
    if (rows.empty()) return;
    const std::int64_t n_min = rows.front().n;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ErrorSequencePoint& row = rows[i];
        const double n = static_cast<double>(row.n);
        row.n2_scaled = n * n * row.error_float;
        const std::int64_t n_ref = std::max(n_min, row.n / 2);
        const std::size_t j = static_cast<std::size_t>(n_ref - n_min);
        if (j == i) {
            row.dim_estimate = 2.0 * std::log(n) / -std::log(row.error_float);
        } else {
            row.dim_estimate = 2.0 * (std::log(n) - std::log(static_cast<double>(n_ref))) /
                               (std::log(rows[j].error_float) - std::log(row.error_float));
        }
    }
}

}  // namespace

std::vector<ErrorSequencePoint> error_sequence_segment(const SegmentProblem& problem,
                                                       std::int64_t n_max) {
    const std::vector<SubInterval> parts = partition(problem);
    std::vector<SweepRow> sweep = greedy_sweep(parts, n_max);
    std::vector<ErrorSequencePoint> rows;
    rows.reserve(sweep.size());
    for (SweepRow& r : sweep) {
        ErrorSequencePoint row;
        row.n = r.n;
        row.error_exact = std::move(r.error);
        row.has_exact = true;
        row.error_float = row.error_exact.to_double();
        row.allocation_counts = std::move(r.allocation.counts);
        rows.push_back(std::move(row));
    }
    fill_scaled_columns(rows);
    return rows;
}

std::vector<ErrorSequencePoint> error_sequence_polygon(const PolygonSpec& spec,
                                                       std::int64_t n_max) {
    std::vector<ErrorSequencePoint> rows;
    if (n_max < spec.m) {
        polygon_side_counts(spec, n_max);  // throws the infeasibility diagnostics
    }
    rows.reserve(static_cast<std::size_t>(n_max - spec.m + 1));
    for (std::int64_t n = spec.m; n <= n_max; ++n) {
        ErrorSequencePoint row;
        row.n = n;
        row.has_exact = false;
        row.allocation_counts = polygon_side_counts(spec, n);
        row.error_float = polygon_error_from_counts(spec, row.allocation_counts);
        rows.push_back(std::move(row));
    }
    fill_scaled_columns(rows);
    return rows;
}

}  // namespace cq
