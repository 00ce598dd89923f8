#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cq/allocate.hpp"
#include "cq/asymptotics.hpp"
#include "cq/errors.hpp"
#include "cq/io.hpp"
#include "cq/oracle.hpp"
#include "cq/polygon.hpp"
#include "cq/segment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerifyFailed = 4;

constexpr double kSegmentGapThreshold = 1e-8;
constexpr double kPolygonGapThreshold = 2e-5;

struct SegmentArgs {
    std::string a = "0";
    std::string b = "1";
    std::string beta;
    std::int64_t n = 0;
    std::string format = "json";
};

struct PolygonArgs {
    int m = 0;
    std::int64_t n = 0;
    std::string format = "json";
};

struct ScanArgs {
    std::string target;
    std::string a = "0";
    std::string b = "1";
    std::string beta;
    int m = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::string out;
};

struct VerifyArgs {
    std::string a = "0";
    std::string b = "1";
    std::string beta;
    int m = 0;
    std::int64_t n = 0;
    int seeds = 20;
    std::uint64_t seed_base = 0;
    double tol = 1e-12;
    std::int64_t samples = 1000000;
};

cq::SegmentProblem make_problem(const std::string& a, const std::string& b,
                                const std::string& beta) {
    return cq::SegmentProblem(cq::Rational::from_string(a), cq::Rational::from_string(b),
                              cq::parse_rational_list(beta));
}

int run_segment(const SegmentArgs& args) {
    const cq::SegmentProblem problem = make_problem(args.a, args.b, args.beta);
    const cq::Allocation allocation = cq::allocate_greedy(cq::partition(problem), args.n);
    const cq::QuantizerResult result = cq::conditional_quantizer(problem, args.n, allocation);
    if (args.format == "csv") {
        std::cout << cq::segment_csv(args.n, result);
    } else {
        std::cout << cq::segment_record(problem, args.n, result).dump(2) << '\n';
    }
    return kExitOk;
}

int run_polygon(const PolygonArgs& args) {
    const cq::PolygonSpec spec(args.m);
    const cq::PolygonQuantizer quantizer = cq::polygon_quantizer(spec, args.n);
    const double coefficient = cq::polygon_coefficient(spec);
    if (args.format == "csv") {
        std::cout << cq::polygon_csv(quantizer, coefficient);
    } else {
        std::cout << cq::polygon_record(quantizer, coefficient).dump(2) << '\n';
    }
    return kExitOk;
}

int run_scan(const ScanArgs& args) {
    std::vector<cq::ErrorSequencePoint> rows;
    cq::Json inputs;
    if (args.target == "segment") {
        const cq::SegmentProblem problem = make_problem(args.a, args.b, args.beta);
        rows = cq::error_sequence_segment(problem, args.n_max);
        cq::Json beta = cq::Json::array();
        for (const auto& c : problem.beta) beta.push_back(c.to_string());
        inputs = cq::Json{{"target", "segment"}, {"a", problem.a.to_string()},
                          {"b", problem.b.to_string()}, {"beta", std::move(beta)}};
    } else if (args.target == "polygon") {
        rows = cq::error_sequence_polygon(cq::PolygonSpec(args.m), args.n_max);
        inputs = cq::Json{{"target", "polygon"}, {"m", args.m}};
    } else {
        throw std::invalid_argument("--target must be 'segment' or 'polygon'");
    }
    inputs["n_min"] = args.n_min;
    inputs["n_max"] = args.n_max;

    // Rows below the minimal feasible n cannot exist; the sweep starts there.
    std::erase_if(rows, [&](const cq::ErrorSequencePoint& r) { return r.n < args.n_min; });

    std::ofstream file(args.out);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + args.out + "'");
    }
    cq::write_scan_csv(file, rows);
    file.close();

    std::cout << cq::Json{{"schema_version", cq::kSchemaVersion},
                          {"command", "scan"},
                          {"inputs", std::move(inputs)},
                          {"results", cq::Json{{"rows", rows.size()}, {"out", args.out}}}}
                     .dump(2)
              << '\n';
    return kExitOk;
}

int run_verify(const VerifyArgs& args, int threads) {
    if (args.m != 0 && !args.beta.empty()) {
        throw std::invalid_argument("pass either --m (polygon) or --beta (segment), not both");
    }
    if (args.m != 0) {
        const cq::PolygonSpec spec(args.m);
        const cq::PolygonQuantizer quantizer = cq::polygon_quantizer(spec, args.n);
        cq::PolygonVerification v;
        v.formula_error = quantizer.error;
        v.discretization_error =
            cq::boundary_discretization_error(spec, quantizer.points, args.samples);
        v.samples = args.samples;
        v.relative_gap = std::abs(v.discretization_error - v.formula_error) / v.formula_error;
        v.threshold = kPolygonGapThreshold;
        v.pass = v.relative_gap < v.threshold;
        std::cout << cq::verify_polygon_record(spec, args.n, v).dump(2) << '\n';
        return v.pass ? kExitOk : kExitVerifyFailed;
    }

    if (args.beta.empty()) {
        throw std::invalid_argument("verify needs --beta (segment) or --m (polygon)");
    }
    const cq::SegmentProblem problem = make_problem(args.a, args.b, args.beta);
    const cq::Allocation allocation = cq::allocate_greedy(cq::partition(problem), args.n);
    const cq::QuantizerResult closed = cq::conditional_quantizer(problem, args.n, allocation);

    std::vector<double> errors(static_cast<std::size_t>(args.seeds));
    const auto worker = [&](int from, int to) {
        for (int s = from; s < to; ++s) {
            errors[static_cast<std::size_t>(s)] =
                cq::lloyd_conditional(problem, allocation, args.seed_base + static_cast<std::uint64_t>(s),
                                      args.tol)
                    .error;
        }
    };
    if (threads > 1 && args.seeds > 1) {
        std::vector<std::thread> pool;
        const int per = (args.seeds + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int from = t * per;
            const int to = std::min(args.seeds, from + per);
            if (from < to) pool.emplace_back(worker, from, to);
        }
        for (auto& th : pool) th.join();
    } else {
        worker(0, args.seeds);
    }

    cq::SegmentVerification v;
    v.closed_form_error = closed.error;
    v.best_oracle_error = errors[0];
    v.best_seed = args.seed_base;
    for (std::size_t s = 1; s < errors.size(); ++s) {
        if (errors[s] < v.best_oracle_error) {
            v.best_oracle_error = errors[s];
            v.best_seed = args.seed_base + s;
        }
    }
    v.seeds = args.seeds;
    v.tol = args.tol;
    const double closed_f = closed.error.to_double();
    v.relative_gap = std::abs(v.best_oracle_error - closed_f) / closed_f;
    v.threshold = kSegmentGapThreshold;
    v.pass = v.relative_gap < v.threshold;
    std::cout << cq::verify_segment_record(problem, args.n, v).dump(2) << '\n';
    return v.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conditional quantization of uniform measures on segments and regular "
                 "polygon boundaries"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for multi-seed verification")
        ->check(CLI::PositiveNumber);

    SegmentArgs segment_args;
    auto* segment = app.add_subcommand(
        "segment", "optimal n-point quantizer for a uniform segment with conditional points");
    segment->add_option("--a", segment_args.a, "support left end (rational string)");
    segment->add_option("--b", segment_args.b, "support right end (rational string)");
    segment->add_option("--beta", segment_args.beta, "conditional points, comma-separated")
        ->required();
    segment->add_option("--n", segment_args.n, "total number of points")->required();
    segment->add_option("--format", segment_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    PolygonArgs polygon_args;
    auto* polygon = app.add_subcommand(
        "polygon", "optimal n-point quantizer on a regular m-gon boundary, vertices conditioned");
    polygon->add_option("--m", polygon_args.m, "number of sides (>= 3)")->required();
    polygon->add_option("--n", polygon_args.n, "total number of points")->required();
    polygon->add_option("--format", polygon_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "error sequence over a range of n, written as CSV");
    scan->add_option("--target", scan_args.target, "segment|polygon")->required();
    scan->add_option("--a", scan_args.a, "support left end (segment)");
    scan->add_option("--b", scan_args.b, "support right end (segment)");
    scan->add_option("--beta", scan_args.beta, "conditional points (segment)");
    scan->add_option("--m", scan_args.m, "number of sides (polygon)");
    scan->add_option("--n-min", scan_args.n_min, "first n")->required();
    scan->add_option("--n-max", scan_args.n_max, "last n")->required();
    scan->add_option("--out", scan_args.out, "output CSV path")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "closed form vs independent oracle (Lloyd / boundary discretization)");
    verify->add_option("--a", verify_args.a, "support left end (segment)");
    verify->add_option("--b", verify_args.b, "support right end (segment)");
    verify->add_option("--beta", verify_args.beta, "conditional points (segment)");
    verify->add_option("--m", verify_args.m, "number of sides (polygon)");
    verify->add_option("--n", verify_args.n, "total number of points")->required();
    verify->add_option("--seeds", verify_args.seeds, "Lloyd restarts (segment)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed_base, "base seed for the restarts");
    verify->add_option("--tol", verify_args.tol, "Lloyd movement tolerance");
    verify->add_option("--samples", verify_args.samples, "boundary samples (polygon)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (segment->parsed()) return run_segment(segment_args);
        if (polygon->parsed()) return run_polygon(polygon_args);
        if (scan->parsed()) return run_scan(scan_args);
        return run_verify(verify_args, threads);
    } catch (const cq::infeasible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
