#include "cq/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cq {

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rational::from_string(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Json rational_json(const Rational& r) {
    return Json{{"exact", r.to_string()}, {"float", r.to_double()}};
}

namespace {

Json segment_inputs(const SegmentProblem& problem, std::int64_t n) {
    Json beta = Json::array();
    for (const Rational& c : problem.beta) beta.push_back(c.to_string());
    return Json{{"a", problem.a.to_string()},
                {"b", problem.b.to_string()},
                {"beta", std::move(beta)},
                {"n", n}};
}

Json counts_json(const std::vector<std::int64_t>& counts) {
    return Json(counts);
}

std::string join_counts(const std::vector<std::int64_t>& counts) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(counts[i]);
    }
    return out;
}

}  // namespace

Json segment_record(const SegmentProblem& problem, std::int64_t n, const QuantizerResult& result) {
    Json points = Json::array();
    for (const Rational& p : result.points) points.push_back(rational_json(p));
    return Json{{"schema_version", kSchemaVersion},
                {"command", "segment"},
                {"inputs", segment_inputs(problem, n)},
                {"results", Json{{"allocation", counts_json(result.allocation.counts)},
                                 {"points", std::move(points)},
                                 {"error", rational_json(result.error)}}}};
}

Json polygon_record(const PolygonQuantizer& quantizer, double coefficient) {
    Json points = Json::array();
    for (const Point2& p : quantizer.points) {
        points.push_back(Json{{"x", p.x()}, {"y", p.y()}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"command", "polygon"},
                {"inputs", Json{{"m", quantizer.m}, {"n", quantizer.n}}},
                {"results", Json{{"side_counts", counts_json(quantizer.side_counts)},
                                 {"points", std::move(points)},
                                 {"error", quantizer.error},
                                 {"coefficient", coefficient}}}};
}

Json verify_segment_record(const SegmentProblem& problem, std::int64_t n,
                           const SegmentVerification& v) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", "verify"},
                {"inputs", segment_inputs(problem, n)},
                {"results",
                 Json{{"target", "segment"},
                      {"closed_form_error", rational_json(v.closed_form_error)},
                      {"oracle",
                       Json{{"best_error", v.best_oracle_error},
                            {"best_seed", v.best_seed},
                            {"seeds", v.seeds},
                            {"tol", v.tol}}},
                      {"relative_gap", v.relative_gap},
                      {"threshold", v.threshold},
                      {"pass", v.pass}}}};
}

Json verify_polygon_record(const PolygonSpec& spec, std::int64_t n,
                           const PolygonVerification& v) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", "verify"},
                {"inputs", Json{{"m", spec.m}, {"n", n}}},
                {"results",
                 Json{{"target", "polygon"},
                      {"formula_error", v.formula_error},
                      {"discretization_error", v.discretization_error},
                      {"samples", v.samples},
                      {"relative_gap", v.relative_gap},
                      {"threshold", v.threshold},
                      {"pass", v.pass}}}};
}

std::string segment_csv(std::int64_t n, const QuantizerResult& result) {
    std::ostringstream os;
    os << "n,k_alloc,v_exact,v_float,points,points_float\n";
    os << n << ',' << join_counts(result.allocation.counts) << ',' << result.error.to_string()
       << ',' << format_double(result.error.to_double()) << ',';
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        if (i) os << ';';
        os << result.points[i].to_string();
    }
    os << ',';
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        if (i) os << ';';
        os << format_double(result.points[i].to_double());
    }
    os << '\n';
    return os.str();
}

std::string polygon_csv(const PolygonQuantizer& quantizer, double coefficient) {
    std::ostringstream os;
    os << "n,k_alloc,v_float,coefficient,points\n";
    os << quantizer.n << ',' << join_counts(quantizer.side_counts) << ','
       << format_double(quantizer.error) << ',' << format_double(coefficient) << ',';
    for (std::size_t i = 0; i < quantizer.points.size(); ++i) {
        if (i) os << ';';
        os << format_double(quantizer.points[i].x()) << ' '
           << format_double(quantizer.points[i].y());
    }
    os << '\n';
    return os.str();
}

void write_scan_csv(std::ostream& os, const std::vector<ErrorSequencePoint>& rows) {
    os << "n,k_alloc,v_exact,v_float,n2_v,dim_est\n";
    for (const ErrorSequencePoint& row : rows) {
        os << row.n << ',' << join_counts(row.allocation_counts) << ',';
        if (row.has_exact) os << row.error_exact.to_string();
        os << ',' << format_double(row.error_float) << ',' << format_double(row.n2_scaled) << ','
           << format_double(row.dim_estimate) << '\n';
    }
}

}  // namespace cq
