#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oghx/core.hpp"

namespace oghx {

/// One line of the verification table. For generator rows `edges` is the
/// family size; for solver rows it is the proven optimum; for zigzag rows it
/// is |T_k(H)|. When a formula is
/// present, `count_matches_formula` records the family's relation to it
/// (equality for exact values, >= for guaranteed lower bounds).
struct VerifyRow {
    std::string family;
    int n = 0;
    int r = 0;
    int k = 0;
    OrderKind order = OrderKind::linear;
    std::int64_t edges = 0;
    std::string claimed_free;
    bool engine_free = true;
    std::optional<std::int64_t> formula_value;
    bool count_matches_formula = true;

    bool passed() const { return engine_free && count_matches_formula; }
};

/// Frozen CSV header.
inline constexpr std::string_view kVerifyCsvHeader =
    "family,n,r,k,order,edges,claimed_free,engine_free,formula_value,count_matches_formula";

std::string to_csv(const std::vector<VerifyRow>& rows);

struct SuiteConfig {
    int max_n = 9;             // freeness checks and small-family grids
    int solver_max_n = 7;      // formula-vs-solver rows
    int gap_max_n = 30;        // gap-majority rows
    bool include_solver = true;
    /// Test hook: replaces a generator's output when it returns a value.
    std::function<std::optional<Hypergraph>(std::string_view family, int n, int r, int k)>
        generator_override;
};

struct SuiteResult {
    std::vector<VerifyRow> rows;
    bool ok() const;
};

SuiteResult verify_suite(const SuiteConfig& config = {});

}  // namespace oghx
