#pragma once

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cq/asymptotics.hpp"
#include "cq/polygon.hpp"
#include "cq/rational.hpp"
#include "cq/segment.hpp"

namespace cq {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

// Shortest representation that parses back to the identical double.
std::string format_double(double x);

// Comma-separated list of "p/q" / integer strings; std::invalid_argument on
// malformed or empty input.
std::vector<Rational> parse_rational_list(std::string_view text);

// {"exact": "p/q", "float": <double>}
Json rational_json(const Rational& r);

Json segment_record(const SegmentProblem& problem, std::int64_t n, const QuantizerResult& result);
Json polygon_record(const PolygonQuantizer& quantizer, double coefficient);

struct SegmentVerification {
    Rational closed_form_error;
    double best_oracle_error;
    std::uint64_t best_seed;
    int seeds;
    double tol;
    double relative_gap;
    double threshold;
    bool pass;
};

struct PolygonVerification {
    double formula_error;
    double discretization_error;
    std::int64_t samples;
    double relative_gap;
    double threshold;
    bool pass;
};

Json verify_segment_record(const SegmentProblem& problem, std::int64_t n,
                           const SegmentVerification& v);
Json verify_polygon_record(const PolygonSpec& spec, std::int64_t n, const PolygonVerification& v);

// Single-record CSV variants of the segment/polygon outputs (one header row,
// one data row; points joined with ';').
std::string segment_csv(std::int64_t n, const QuantizerResult& result);
std::string polygon_csv(const PolygonQuantizer& quantizer, double coefficient);

// Scan table with the fixed column set n,k_alloc,v_exact,v_float,n2_v,dim_est;
// v_exact is empty for float-only rows.
void write_scan_csv(std::ostream& os, const std::vector<ErrorSequencePoint>& rows);

}  // namespace cq
