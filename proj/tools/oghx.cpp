#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oghx/bounds.hpp"
#include "oghx/combinatorics.hpp"
#include "oghx/constructions.hpp"
#include "oghx/containment.hpp"
#include "oghx/core.hpp"
#include "oghx/patterns.hpp"
#include "oghx/solver.hpp"
#include "oghx/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInfeasible = 3, kTimeout = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    int n = 0;
    int r = 0;
    int k = 0;
    int m = 0;
    std::string order;
    std::string pattern;
    std::string pattern_file;
    std::string family;
    std::string file;
    std::string out;
    std::string csv;
    std::vector<int> parts;
    bool json = false;
    double timeout = 0;
    std::uint64_t seed = 0;
    bool parallel = false;
    bool expect_free = false;
    int max_n = 9;
    int solver_max_n = 7;
    bool no_solver = false;
};

oghx::OrderKind order_or(const Args& a, oghx::OrderKind fallback) {
    return a.order.empty() ? fallback : oghx::parse_order_kind(a.order);
}

oghx::Pattern make_pattern(const Args& a, int r, oghx::OrderKind order) {
    if (!a.pattern_file.empty()) {
        auto p = oghx::parse_pattern(oghx::read_text_file(a.pattern_file));
        if (p.order != order) p = oghx::custom_pattern(p.m, order, p.edges, p.name);
        return p;
    }
    if (a.pattern == "crossing-path") return oghx::crossing_path_pattern({r, a.k}, order);
    if (a.pattern == "crossing-matching") return oghx::crossing_matching_pattern({r, a.k}, order);
    throw UsageError("unknown pattern '" + a.pattern + "' (crossing-path, crossing-matching)");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) std::cout << text;
    else oghx::write_text_file(path, text);
}

int run_construct(const Args& a) {
    const auto order = order_or(a, oghx::OrderKind::linear);
    std::optional<oghx::Hypergraph> g;
    if (a.family == "consecutive") g = oghx::gen_consecutive(a.n, a.r, a.k, order);
    else if (a.family == "pow2-gap") g = oghx::gen_pow2_gap(a.n, a.r, order);
    else if (a.family == "gap-free") g = oghx::gen_gap_free(a.n, a.r, a.k, a.m);
    else if (a.family == "modular-slice") g = oghx::gen_modular_slice(a.n, a.r, a.k).first;
    else if (a.family == "interior-consecutive") g = oghx::gen_interior_consecutive(a.n, a.r);
    else if (a.family == "matching-lower") g = oghx::gen_matching_lower(a.n, a.r, a.k);
    else if (a.family == "star") g = oghx::gen_star(a.n, a.r, order_or(a, oghx::OrderKind::cyclic));
    else if (a.family == "complete") g = oghx::complete_hypergraph(a.n, a.r, order);
    else throw UsageError("unknown family '" + a.family + "'");
    emit(oghx::serialize(*g), a.out);
    std::cerr << a.family << ": " << g->size() << " edges\n";
    return kOk;
}

int run_check(const Args& a) {
    const auto host = oghx::read_hypergraph_file(a.file);
    const auto order = order_or(a, host.order());
    const auto p = make_pattern(a, host.r(), order);
    const auto g = oghx::with_order(host, order);
    const auto emb = oghx::find_embedding(g, p);
    if (a.json) {
        json j;
        j["free"] = !emb.has_value();
        j["edges"] = g.size();
        j["pattern"] = p.name;
        j["order"] = std::string(oghx::to_string(order));
        if (emb) j["copy"] = oghx::copy_edges(*emb, p);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (emb ? "CONTAINS" : "FREE") << ' ' << g.size() << " edges\n";
        if (emb)
            for (const auto& e : oghx::copy_edges(*emb, p)) {
                for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? " " : "  ") << e[i];
                std::cout << '\n';
            }
    }
    return emb && a.expect_free ? kFailed : kOk;
}

int run_solve(const Args& a) {
    oghx::SolveOptions options;
    options.budget.max_seconds = a.timeout;
    options.parallel = a.parallel;
    oghx::SolveResult result;
    oghx::Pattern p;
    if (!a.parts.empty()) {
        const int r = static_cast<int>(a.parts.size());
        if (a.r != 0 && a.r != r) throw UsageError("--r must equal the number of parts");
        if (!a.order.empty() && a.order != "linear") throw UsageError("interval hosts are linear");
        p = make_pattern(a, r, oghx::OrderKind::linear);
        result = oghx::solve_interval(a.parts, p, options);
    } else {
        const auto order = order_or(a, oghx::OrderKind::linear);
        p = make_pattern(a, a.r, order);
        result = oghx::solve_exact(a.n, a.r, order, p, options);
    }
    if (!a.out.empty()) oghx::write_text_file(a.out, oghx::serialize(result.witness));
    std::cout << result.to_json(a.out) << '\n';
    if (!oghx::verify_witness(result.witness, p)) {
        std::cerr << "witness failed verification\n";
        return kFailed;
    }
    return result.status == oghx::SolveStatus::timeout ? kTimeout : kOk;
}

int run_bounds(const Args& a) {
    const auto order = order_or(a, oghx::OrderKind::cyclic);
    oghx::BoundReport report;
    if (a.pattern == "crossing-path")
        report = order == oghx::OrderKind::linear ? oghx::ex_ordered_path_report(a.n, a.r, a.k)
                                                  : oghx::ex_cg_path_report(a.n, a.r, a.k);
    else if (a.pattern == "crossing-matching")
        report = oghx::ex_cg_matching_report(a.n, a.r, a.k, order);
    else if (a.pattern == "interval") {
        json j;
        j["parts"] = a.parts;
        j["k"] = a.k;
        j["interval_bound"] = oghx::interval_bound(a.parts, a.k);
        std::cout << j.dump() << '\n';
        return kOk;
    } else
        throw UsageError("unknown pattern '" + a.pattern + "'");
    std::cout << report.to_json() << '\n';
    return kOk;
}

int run_verify(const Args& a) {
    oghx::SuiteConfig config;
    config.max_n = a.max_n;
    config.solver_max_n = a.solver_max_n;
    config.include_solver = !a.no_solver;
    const auto result = oghx::verify_suite(config);
    const auto csv = oghx::to_csv(result.rows);
    emit(csv, a.csv);
    std::size_t failed = 0;
    for (const auto& row : result.rows) failed += row.passed() ? 0 : 1;
    std::cerr << result.rows.size() << " rows, " << failed << " failed\n";
    return result.ok() ? kOk : kFailed;
}

int run_selftest() {
    using namespace oghx;
    struct Case {
        std::string name;
        std::int64_t expected;
        std::function<std::int64_t()> actual;
    };
    const std::vector<Case> cases = {
        {"solve linear P_3^2 n=5", 7,
         [] { return solve_exact(5, 2, OrderKind::linear, crossing_path_pattern({2, 3}, OrderKind::linear)).optimum; }},
        {"solve linear P_2^2 n=4", 3,
         [] { return solve_exact(4, 2, OrderKind::linear, crossing_path_pattern({2, 2}, OrderKind::linear)).optimum; }},
        {"solve cyclic M_2^2 n=5", 7,
         [] { return solve_exact(5, 2, OrderKind::cyclic, crossing_matching_pattern({2, 2}, OrderKind::cyclic)).optimum; }},
        {"consecutive(6,3,2) edges", 10, [] { return std::int64_t(gen_consecutive(6, 3, 2).size()); }},
        {"consecutive(6,3,2) free of P_2^3", 1,
         [] { return std::int64_t(is_free(gen_consecutive(6, 3, 2), crossing_path_pattern({3, 2}, OrderKind::linear))); }},
        {"K_5^2 contains P_3^2", 0,
         [] { return std::int64_t(is_free(complete_hypergraph(5, 2, OrderKind::linear),
                                          crossing_path_pattern({2, 3}, OrderKind::linear))); }},
        {"cyclic M_2^3 bound n=7", 31, [] { return *ex_cg_matching_report(7, 3, 2).exact; }},
    };
    int failures = 0;
    for (const auto& c : cases) {
        const auto got = c.actual();
        const bool ok = got == c.expected;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << " (expected " << c.expected << ", got " << got
                  << ")\n";
    }
    return failures ? kFailed : kOk;
}

int exit_for(const oghx::Error& e) {
    switch (e.code()) {
        case oghx::ErrorCode::ArityMismatch:
        case oghx::ErrorCode::VertexOutOfRange:
        case oghx::ErrorCode::NotStrictlyIncreasing:
        case oghx::ErrorCode::DuplicateEdge:
        case oghx::ErrorCode::SyntaxError:
        case oghx::ErrorCode::IsolatedVertex:
        case oghx::ErrorCode::OrderKindMismatch:
            return kUsage;
        default:
            return kInfeasible;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oghx: crossing paths and matchings in ordered and cyclic hypergraphs"};
    app.require_subcommand(1);
    Args a;

    auto add_nrk = [&](CLI::App* sub) {
        sub->add_option("--n", a.n, "number of vertices");
        sub->add_option("--r", a.r, "uniformity");
        sub->add_option("--k", a.k, "number of pattern edges");
        sub->add_option("--order", a.order, "linear or cyclic")->check(CLI::IsMember({"linear", "cyclic"}));
    };

    auto* construct = app.add_subcommand("construct", "write a construction in oghx v1 format");
    add_nrk(construct);
    construct->add_option("--family", a.family, "consecutive, pow2-gap, gap-free, modular-slice, "
                                                "interior-consecutive, matching-lower, star, complete")
        ->required();
    construct->add_option("--m", a.m, "gap threshold for gap-free");
    construct->add_option("-o", a.out, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "test a host file for a pattern");
    check->add_option("--file", a.file, "host file")->required()->check(CLI::ExistingFile);
    check->add_option("--pattern", a.pattern, "crossing-path or crossing-matching");
    check->add_option("--pattern-file", a.pattern_file, "custom pattern file")->check(CLI::ExistingFile);
    check->add_option("--k", a.k, "number of pattern edges");
    check->add_option("--order", a.order, "override the host order")->check(CLI::IsMember({"linear", "cyclic"}));
    check->add_flag("--json", a.json, "JSON output");
    check->add_flag("--expect-free", a.expect_free, "exit 1 if a copy is found");

    auto* solve = app.add_subcommand("solve", "exact extremal number at small n");
    add_nrk(solve);
    solve->add_option("--pattern", a.pattern, "crossing-path or crossing-matching");
    solve->add_option("--pattern-file", a.pattern_file, "custom pattern file")->check(CLI::ExistingFile);
    solve->add_option("--parts", a.parts, "interval part sizes n1,n2,...")->delimiter(',');
    solve->add_option("--timeout", a.timeout, "wall-clock budget in seconds");
    solve->add_option("-o", a.out, "witness output file");
    solve->add_flag("--json", a.json, "JSON output (default)");
    solve->add_flag("--parallel,!--deterministic", a.parallel, "parallel search (OGHX_THREADS workers)");

    auto* bounds = app.add_subcommand("bounds", "exact values and bounds as JSON");
    add_nrk(bounds);
    bounds->add_option("--pattern", a.pattern, "crossing-path, crossing-matching or interval")->required();
    bounds->add_option("--parts", a.parts, "interval part sizes")->delimiter(',');
    bounds->add_flag("--json", a.json, "JSON output (default)");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--n", a.max_n, "largest n for freeness grids");
    verify->add_option("--solver-n", a.solver_max_n, "largest n for solver rows");
    verify->add_flag("--no-solver", a.no_solver, "skip solver rows");
    verify->add_option("--csv", a.csv, "CSV output file (default stdout)");
    verify->add_option("--seed", a.seed, "accepted for reproducibility; the suite is deterministic");

    auto* selftest = app.add_subcommand("selftest", "quick built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*construct) return run_construct(a);
        if (*check) return run_check(a);
        if (*solve) return run_solve(a);
        if (*bounds) return run_bounds(a);
        if (*verify) return run_verify(a);
        if (*selftest) return run_selftest();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const oghx::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    }
    return kUsage;
}
