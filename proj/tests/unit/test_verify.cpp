#include "doctest.h"

#include <sstream>

#include "oghx/constructions.hpp"
#include "oghx/verify.hpp"

using namespace oghx;

TEST_CASE("default suite passes") {
    auto result = verify_suite();
    CHECK(result.ok());
    CHECK(result.rows.size() > 100);
    for (const auto& row : result.rows) {
        CAPTURE(row.family);
        CAPTURE(row.n);
        CHECK(row.engine_free);
        CHECK(row.count_matches_formula);
    }
}

TEST_CASE("csv is deterministic with a frozen header") {
    SuiteConfig config;
    config.include_solver = false;
    const auto a = to_csv(verify_suite(config).rows);
    const auto b = to_csv(verify_suite(config).rows);
    CHECK(a == b);
    std::istringstream lines(a);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "family,n,r,k,order,edges,claimed_free,engine_free,formula_value,count_matches_formula");
    std::string line;
    while (std::getline(lines, line)) CHECK(std::count(line.begin(), line.end(), ',') == 9);
}

TEST_CASE("corrupted generator fails the suite") {
    SuiteConfig config;
    config.include_solver = false;
    config.generator_override = [](std::string_view family, int n, int r, int k) -> std::optional<Hypergraph> {
        if (family != "consecutive" || n != 6 || r != 3 || k != 2) return std::nullopt;
        return complete_hypergraph(n, r, OrderKind::linear);
    };
    auto result = verify_suite(config);
    CHECK_FALSE(result.ok());
    int failing = 0;
    for (const auto& row : result.rows)
        if (!row.passed()) {
            ++failing;
            CHECK(row.family == "consecutive");
            CHECK_FALSE(row.engine_free);
            CHECK_FALSE(row.count_matches_formula);
        }
    CHECK(failing == 1);
}

TEST_CASE("row formatting") {
    VerifyRow row;
    row.family = "x";
    row.n = 5;
    row.r = 2;
    row.k = 3;
    row.edges = 7;
    row.claimed_free = "crossing-path r=2 k=3";
    CHECK(to_csv({row}) == std::string(kVerifyCsvHeader) + "\nx,5,2,3,linear,7,crossing-path r=2 k=3,true,,true\n");
    row.formula_value = 7;
    row.engine_free = false;
    CHECK_FALSE(row.passed());
    CHECK(to_csv({row}).find(",false,7,true") != std::string::npos);
}
