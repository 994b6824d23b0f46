#include "doctest.h"

#include "json.hpp"
#include "oghx/bounds.hpp"
#include "oghx/constructions.hpp"
#include "oghx/containment.hpp"
#include "oghx/solver.hpp"
#include "oracles.hpp"

using namespace oghx;

namespace {

SolveOptions unseeded() {
    SolveOptions o;
    o.use_construction_seeds = false;
    return o;
}

}  // namespace

TEST_CASE("build_conflicts") {
    auto a = build_conflicts(4, 2, OrderKind::linear, crossing_matching_pattern({2, 2}, OrderKind::linear));
    CHECK(a.ground.size() == 6);
    CHECK(a.copies.size() == 1);
    auto b = build_conflicts(4, 3, OrderKind::linear, crossing_path_pattern({3, 2}, OrderKind::linear));
    CHECK(b.ground.size() == 4);
    CHECK(b.copies.size() == 1);
    auto c = build_conflicts(5, 2, OrderKind::linear, crossing_path_pattern({2, 3}, OrderKind::linear));
    CHECK(c.ground.size() == 10);
    CHECK(c.copies.size() == 5);
    for (const auto& copy : c.copies) {
        CHECK(copy.size() == 3);
        CHECK(std::is_sorted(copy.begin(), copy.end()));
        CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
    }
    try {
        build_conflicts(3, 2, OrderKind::linear, crossing_path_pattern({2, 3}, OrderKind::linear));
        FAIL("expected PatternTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PatternTooLarge);
    }
}

TEST_CASE("solve_exact small values") {
    auto a = solve_exact(5, 2, OrderKind::linear, crossing_path_pattern({2, 3}, OrderKind::linear));
    CHECK(a.optimum == 7);
    CHECK(a.status == SolveStatus::proven);
    CHECK(verify_witness(a.witness, crossing_path_pattern({2, 3}, OrderKind::linear)));
    CHECK(static_cast<std::int64_t>(a.witness.size()) == a.optimum);
    CHECK(solve_exact(4, 2, OrderKind::linear, crossing_path_pattern({2, 2}, OrderKind::linear)).optimum == 3);
    CHECK(solve_exact(5, 2, OrderKind::cyclic, crossing_matching_pattern({2, 2}, OrderKind::cyclic)).optimum == 7);
}

TEST_CASE("solver agrees with exhaustive subset search") {
    struct Case {
        int n, r, k;
        bool path;
        OrderKind order;
    };
    std::vector<Case> cases;
    for (auto order : {OrderKind::linear, OrderKind::cyclic}) {
        for (int n = 3; n <= 6; ++n)
            for (int k = 1; k <= 4; ++k) cases.push_back({n, 2, k, true, order});
        for (int n = 4; n <= 6; ++n)
            for (int k = 1; k <= 3; ++k) cases.push_back({n, 3, k, true, order});
        for (int n = 4; n <= 6; ++n) cases.push_back({n, 2, 2, false, order});
        cases.push_back({6, 2, 3, false, order});
        cases.push_back({6, 3, 2, false, order});
    }
    for (const auto& c : cases) {
        auto p = c.path ? crossing_path_pattern({c.r, c.k}, c.order) : crossing_matching_pattern({c.r, c.k}, c.order);
        const auto expected = p.m > c.n ? oracle::choose(c.n, c.r) : oracle::brute_ex(c.n, c.r, c.order, p);
        for (bool seeds : {false, true}) {
            SolveOptions o;
            o.use_construction_seeds = seeds;
            auto res = solve_exact(c.n, c.r, c.order, p, o);
            CAPTURE(p.name);
            CAPTURE(c.n);
            CHECK(res.optimum == expected);
            CHECK(verify_witness(res.witness, p));
            CHECK(static_cast<std::int64_t>(res.witness.size()) == res.optimum);
        }
    }
}

TEST_CASE("verify_witness") {
    auto p = crossing_path_pattern({2, 3}, OrderKind::linear);
    CHECK(verify_witness(solve_exact(5, 2, OrderKind::linear, p).witness, p));
    CHECK(verify_witness(gen_consecutive(6, 3, 2), crossing_path_pattern({3, 2}, OrderKind::linear)));
    CHECK_FALSE(verify_witness(complete_hypergraph(5, 2, OrderKind::linear), p));
}

TEST_CASE("deterministic mode is reproducible") {
    auto p = crossing_path_pattern({2, 3}, OrderKind::cyclic);
    auto a = solve_exact(7, 2, OrderKind::cyclic, p, unseeded());
    auto b = solve_exact(7, 2, OrderKind::cyclic, p, unseeded());
    CHECK(a.optimum == b.optimum);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);

    SolveOptions par = unseeded();
    par.parallel = true;
    for (int threads : {1, 2, 4}) {
        par.threads = threads;
        auto c = solve_exact(7, 2, OrderKind::cyclic, p, par);
        CHECK(c.optimum == a.optimum);
        CHECK(verify_witness(c.witness, p));
    }
}

TEST_CASE("seeding keeps the optimum") {
    for (int n = 5; n <= 7; ++n) {
        auto p = crossing_path_pattern({2, 3}, OrderKind::linear);
        CHECK(solve_exact(n, 2, OrderKind::linear, p).optimum ==
              solve_exact(n, 2, OrderKind::linear, p, unseeded()).optimum);
        auto seed = construction_seed(n, p);
        REQUIRE(seed.has_value());
        CHECK(verify_witness(*seed, p));
    }
}

TEST_CASE("solver invariants on the grid") {
    for (int r = 2; r <= 3; ++r)
        for (int k = 1; k <= r + 1; ++k)
            for (int n = r + k; n <= (r == 2 ? 7 : 6); ++n) {
                auto lin = crossing_path_pattern({r, k}, OrderKind::linear);
                auto cyc = crossing_path_pattern({r, k}, OrderKind::cyclic);
                const auto lo = solve_exact(n, r, OrderKind::linear, lin).optimum;
                const auto co = solve_exact(n, r, OrderKind::cyclic, cyc).optimum;
                CHECK(co <= lo);
                CHECK(lo >= static_cast<std::int64_t>(gen_consecutive(n, r, std::min(k, r + 1)).size()));
            }
    for (int n = 4; n <= 7; ++n) {
        auto lin = solve_exact(n, 2, OrderKind::linear, crossing_matching_pattern({2, 2}, OrderKind::linear));
        auto cyc = solve_exact(n, 2, OrderKind::cyclic, crossing_matching_pattern({2, 2}, OrderKind::cyclic));
        CHECK(lin.optimum == cyc.optimum);
        for (int s = 1; s < n; ++s)
            CHECK(verify_witness(rotate(cyc.witness, s), crossing_matching_pattern({2, 2}, OrderKind::cyclic)));
    }
}

TEST_CASE("interval hosts") {
    auto p2 = crossing_path_pattern({2, 2}, OrderKind::linear);
    auto ones = solve_interval({1, 1}, p2);
    CHECK(ones.optimum == 1);
    auto p1 = crossing_path_pattern({3, 1}, OrderKind::linear);
    CHECK(solve_interval({1, 1, 1}, p1).optimum == 0);
    auto p23 = crossing_path_pattern({3, 2}, OrderKind::linear);
    auto two = solve_interval({2, 2, 2}, p23);
    CHECK(two.optimum <= 8);
    CHECK(two.optimum <= interval_bound({2, 2, 2}, 2));
    CHECK(two.optimum <= solve_exact(6, 3, OrderKind::linear, p23).optimum);
    CHECK(verify_witness(two.witness, p23));
    for (const auto& e : two.witness.edges()) {
        CHECK(e[0] < 2);
        CHECK(e[1] >= 2);
        CHECK(e[1] < 4);
        CHECK(e[2] >= 4);
    }
}

TEST_CASE("budgets") {
    auto p = crossing_path_pattern({2, 3}, OrderKind::linear);
    SolveOptions tiny = unseeded();
    tiny.budget.max_nodes = 1;
    auto res = solve_exact(8, 2, OrderKind::linear, p, tiny);
    CHECK(res.status == SolveStatus::timeout);
    CHECK(verify_witness(res.witness, p));
    CHECK(res.optimum == static_cast<std::int64_t>(res.witness.size()));

    SolveOptions mem;
    mem.budget.max_copies = 3;
    try {
        solve_exact(6, 2, OrderKind::linear, p, mem);
        FAIL("expected OutOfMemory");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfMemory);
    }
}

TEST_CASE("result JSON") {
    auto res = solve_exact(5, 2, OrderKind::linear, crossing_path_pattern({2, 3}, OrderKind::linear));
    auto j = nlohmann::json::parse(res.to_json("w.ogh"));
    CHECK(j["optimum"] == 7);
    CHECK(j["status"] == "proven");
    CHECK(j["witness_file"] == "w.ogh");
    CHECK(j.contains("nodes"));
}
