#include "doctest.h"

#include <random>

#include "oghx/core.hpp"
#include "oracles.hpp"

using namespace oghx;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("make_hypergraph validates") {
    CHECK(make_hypergraph(4, 2, OrderKind::linear, {{0, 2}, {1, 3}}).size() == 2);
    CHECK(make_hypergraph(5, 3, OrderKind::cyclic, {{0, 1, 4}}).size() == 1);
    CHECK(code_of([] { make_hypergraph(4, 2, OrderKind::linear, {{0, 2}, {0, 2}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { make_hypergraph(4, 2, OrderKind::linear, {{0, 1, 2}}); }) == ErrorCode::ArityMismatch);
    CHECK(code_of([] { make_hypergraph(4, 2, OrderKind::linear, {{0, 4}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { make_hypergraph(4, 2, OrderKind::linear, {{2, 0}}); }) ==
          ErrorCode::NotStrictlyIncreasing);
}

TEST_CASE("edges are kept sorted") {
    auto h = make_hypergraph(5, 2, OrderKind::linear, {{3, 4}, {0, 1}, {1, 2}});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
    CHECK(h.has_edge({1, 2}));
    CHECK_FALSE(h.has_edge({0, 2}));
}

TEST_CASE("shadow") {
    auto one = make_hypergraph(3, 3, OrderKind::linear, {{0, 1, 2}});
    CHECK(shadow(one) == ShadowSet{{0, 1}, {0, 2}, {1, 2}});
    CHECK(shadow(complete_hypergraph(6, 3, OrderKind::linear)).size() == 15);
    CHECK(code_of([] { shadow(make_hypergraph(3, 1, OrderKind::linear, {{0}})); }) == ErrorCode::ArityTooSmall);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = oracle::random_host(rng, 7, 3, OrderKind::linear, 0.3);
        const auto s = shadow(h);
        CHECK(s == oracle::shadow(h));
        CHECK(s.size() <= std::min<std::size_t>(3 * h.size(), oracle::choose(7, 2)));
    }
}

TEST_CASE("rotate") {
    auto h = make_hypergraph(5, 3, OrderKind::cyclic, {{0, 1, 2}});
    CHECK(rotate(h, 0) == h);
    CHECK(rotate(h, 4).edges() == std::vector<Edge>{{0, 1, 4}});
    CHECK(code_of([] { rotate(make_hypergraph(4, 2, OrderKind::linear, {}), 1); }) == ErrorCode::NotCyclic);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_host(rng, 7, 3, OrderKind::cyclic, 0.4);
        for (int s = 0; s < 7; ++s) {
            auto rg = rotate(g, s);
            CHECK(rg.size() == g.size());
            CHECK(rotate(rg, 7 - s) == g);
        }
    }
}

TEST_CASE("edge_sum_mod") {
    CHECK(edge_sum_mod({0, 1, 2}, 3) == 0);
    CHECK(edge_sum_mod({1, 4, 7}, 6) == 0);
    CHECK(edge_sum_mod({2, 3}, 4) == 1);
}

TEST_CASE("v1 format") {
    auto h = parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n0 2\n");
    CHECK(h.n() == 4);
    CHECK(h.size() == 1);
    CHECK(h.edges()[0] == Edge{0, 2});

    const std::string text = "oghx v1\nn=5 r=3 order=cyclic\n0 1 4\n1 2 3\n";
    CHECK(serialize(parse_hypergraph(text)) == text);

    auto with_comments = parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n# note\n\n1 3\n0 2\n");
    CHECK(serialize(with_comments) == "oghx v1\nn=4 r=2 order=linear\n0 2\n1 3\n");

    try {
        parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n0 1\n2 0\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStrictlyIncreasing);
        REQUIRE(e.line().has_value());
        CHECK(*e.line() == 4);
    }
    CHECK(code_of([] { parse_hypergraph("oghx v2\nn=4 r=2 order=linear\n"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n0 2"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n0 x\n"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_hypergraph("oghx v1\nn=4 r=2 order=linear\n0 2\n0 2\n"); }) ==
          ErrorCode::DuplicateEdge);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_host(rng, 8, 3, trial % 2 ? OrderKind::cyclic : OrderKind::linear, 0.2);
        CHECK(parse_hypergraph(serialize(g)) == g);
    }
}

TEST_CASE("subset index on large n uses the fallback") {
    std::vector<Edge> edges = {{0, 100, 150}, {3, 140, 199}};
    Hypergraph big(200, 3, OrderKind::linear, edges);
    SubsetIndex idx(big);
    CHECK_FALSE(idx.uses_mask());
    CHECK(idx.contains_subset({150, 0}));
    CHECK(idx.contains_edge({3, 140, 199}));
    CHECK_FALSE(idx.contains_subset({0, 140}));

    SubsetIndex small(make_hypergraph(10, 3, OrderKind::linear, {{0, 4, 9}}));
    CHECK(small.uses_mask());
    CHECK(small.contains_subset({9, 4}));
    CHECK_FALSE(small.contains_edge({0, 4}));
}
