#include "oghx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oghx/bounds.hpp"
#include "oghx/combinatorics.hpp"
#include "oghx/constructions.hpp"
#include "oghx/containment.hpp"
#include "oghx/patterns.hpp"
#include "oghx/solver.hpp"

namespace oghx {

std::string to_csv(const std::vector<VerifyRow>& rows) {
    std::ostringstream out;
    out << kVerifyCsvHeader << '\n';
    for (const auto& row : rows) {
        out << row.family << ',' << row.n << ',' << row.r << ',' << row.k << ','
            << to_string(row.order) << ',' << row.edges << ',' << row.claimed_free << ','
            << (row.engine_free ? "true" : "false") << ',';
        if (row.formula_value) out << *row.formula_value;
        out << ',' << (row.count_matches_formula ? "true" : "false") << '\n';
    }
    return out.str();
}

bool SuiteResult::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.passed(); });
}

namespace {

class Suite {
public:
    explicit Suite(const SuiteConfig& config) : config_(config) {}

    SuiteResult run() {
        consecutive_rows();
        pow2_rows();
        modular_slice_rows();
        interior_rows();
        matching_lower_rows();
        gap_majority_rows();
        pow2_count_rows();
        zigzag_rows();
        if (config_.include_solver) solver_rows();
        return SuiteResult{std::move(rows_)};
    }

private:
    template <typename Make>
    Hypergraph generate(std::string_view family, int n, int r, int k, Make&& make) {
        if (config_.generator_override)
            if (auto replaced = config_.generator_override(family, n, r, k)) return *replaced;
        return make();
    }

    void freeness_row(std::string family, const Hypergraph& g, int k, const Pattern& p,
                      std::optional<std::int64_t> formula, bool exact_formula) {
        VerifyRow row;
        row.family = std::move(family);
        row.n = g.n();
        row.r = g.r();
        row.k = k;
        row.order = p.order;
        row.edges = static_cast<std::int64_t>(g.size());
        row.claimed_free = p.name;
        row.engine_free = is_free(with_order(g, p.order), p);
        row.formula_value = formula;
        if (formula) row.count_matches_formula = exact_formula ? row.edges == *formula : row.edges >= *formula;
        rows_.push_back(std::move(row));
    }

    void consecutive_rows() {
        for (int r = 2; r <= 4; ++r)
            for (int k = 2; k <= r + 1; ++k)
                for (int n = r + 1; n <= config_.max_n; ++n) {
                    auto g = generate("consecutive", n, r, k, [&] { return gen_consecutive(n, r, k); });
                    freeness_row("consecutive", g, k, crossing_path_pattern({r, k}, OrderKind::linear),
                                 binom(n, r) - binom(n - k + 1, r), true);
                }
        const int r = 3;
        for (int n = r + 1; n <= config_.max_n; ++n) {
            auto g = generate("consecutive", n, r, r + 1, [&] { return gen_consecutive(n, r, r + 1); });
            freeness_row("consecutive", g, r + 1, crossing_matching_pattern({r, 2}, OrderKind::cyclic),
                         binom(n, r) - binom(n - r, r), true);
        }
    }

    void pow2_rows() {
        for (int r = 2; r <= 3; ++r)
            for (int n = 8; n <= std::max(config_.max_n, 8); ++n) {
                auto g = generate("pow2-gap", n, r, r + 2, [&] { return gen_pow2_gap(n, r); });
                freeness_row("pow2-gap", g, r + 2, crossing_path_pattern({r, r + 2}, OrderKind::linear),
                             std::nullopt, true);
                if (r == 2)
                    freeness_row("pow2-gap", g, 2 * r, crossing_path_pattern({r, 2 * r}, OrderKind::cyclic),
                                 std::nullopt, true);
            }
    }

    void modular_slice_rows() {
        const int r = 3;
        for (int k = 2; k <= 3; ++k)
            for (int n = r + 1; n <= config_.max_n; ++n) {
                const int t = t_param(r, k);
                if (t * (n / t) <= r) continue;
                const int m = (t * (n / t)) / t;
                const auto gap_free = gen_gap_free(t * (n / t), r, k, m);
                auto g = generate("modular-slice", n, r, k, [&] { return gen_modular_slice(n, r, k).first; });
                // Pigeonhole over the m residue classes.
                const std::int64_t floor_share = (static_cast<std::int64_t>(gap_free.size()) + m - 1) / m;
                freeness_row("modular-slice", g, k, crossing_path_pattern({r, k}, OrderKind::cyclic),
                             floor_share, false);
            }
    }

    void interior_rows() {
        const int r = 3;
        for (int n = r + 2; n <= config_.max_n; ++n) {
            auto g = generate("interior-consecutive", n, r, r, [&] { return gen_interior_consecutive(n, r); });
            freeness_row("interior-consecutive", g, r, crossing_path_pattern({r, r}, OrderKind::cyclic),
                         std::nullopt, true);
        }
    }

    void matching_lower_rows() {
        const int r = 3, k = 3;
        for (int n = r + 1; n <= config_.max_n; ++n) {
            auto g = generate("matching-lower", n, r, k, [&] { return gen_matching_lower(n, r, k); });
            freeness_row("matching-lower", g, k, crossing_matching_pattern({r, k}, OrderKind::cyclic),
                         std::nullopt, true);
        }
    }

    void gap_majority_rows() {
        const int r = 3;
        for (int k = 2; k <= 3; ++k)
            for (int n = 10; n <= config_.gap_max_n; ++n) {
                const auto m = static_cast<int>(gap_threshold(n, r, k).ceil());
                auto g = generate("gap-free", n, r, k, [&] { return gen_gap_free(n, r, k, m); });
                VerifyRow row;
                row.family = "gap-free";
                row.n = n;
                row.r = r;
                row.k = k;
                row.order = OrderKind::cyclic;
                row.edges = static_cast<std::int64_t>(g.size());
                row.claimed_free = "none";
                row.formula_value = (binom(n, r) + 1) / 2;
                row.count_matches_formula = 2 * row.edges >= binom(n, r);
                rows_.push_back(std::move(row));
            }
    }

    void pow2_count_rows() {
        const int r = 3;
        for (int n = 61; n <= 100; ++n) {
            auto g = generate("pow2-gap", n, r, r + 2, [&] { return gen_pow2_gap(n, r); });
            VerifyRow row;
            row.family = "pow2-gap-count";
            row.n = n;
            row.r = r;
            row.k = r + 2;
            row.order = OrderKind::linear;
            row.edges = static_cast<std::int64_t>(g.size());
            row.claimed_free = "none";
            // n^(r-1) log2(n) / ((r-2)! 3^r) with r = 3, rounded up.
            const double bound = static_cast<double>(n) * n * std::log2(static_cast<double>(n)) / 27.0;
            row.formula_value = static_cast<std::int64_t>(std::ceil(bound));
            row.count_matches_formula = static_cast<double>(row.edges) >= bound;
            rows_.push_back(std::move(row));
        }
    }

    // |T_k(H)| >= r e(H) - (r-1)(k-1) |shadow(H)| on structured cyclic hosts.
    void zigzag_rows() {
        const int r = 3;
        for (int k = 2; k <= 3; ++k)
            for (int n = r + 1; n <= std::min(config_.max_n, 8); ++n) {
                const std::vector<std::pair<std::string, Hypergraph>> hosts = {
                    {"zigzag-complete", complete_hypergraph(n, r, OrderKind::cyclic)},
                    {"zigzag-consecutive", with_order(gen_consecutive(n, r, k), OrderKind::cyclic)},
                    {"zigzag-star", gen_star(n, r)},
                };
                for (const auto& [family, h] : hosts) {
                    VerifyRow row;
                    row.family = family;
                    row.n = n;
                    row.r = r;
                    row.k = k;
                    row.order = OrderKind::cyclic;
                    row.edges = tk_count(h, k);
                    row.claimed_free = "none";
                    const auto e = static_cast<std::int64_t>(h.size());
                    const auto sh = static_cast<std::int64_t>(shadow(h).size());
                    row.formula_value = r * e - (r - 1) * (k - 1) * sh;
                    row.count_matches_formula = row.edges >= *row.formula_value;
                    rows_.push_back(std::move(row));
                }
            }
    }

    void solver_row(int n, int r, int k, const Pattern& p, std::int64_t formula) {
        SolveOptions options;
        options.use_construction_seeds = false;
        const auto result = solve_exact(n, r, p.order, p, options);
        VerifyRow row;
        row.family = "solver";
        row.n = n;
        row.r = r;
        row.k = k;
        row.order = p.order;
        row.edges = result.optimum;
        row.claimed_free = p.name;
        row.engine_free = verify_witness(result.witness, p);
        row.formula_value = formula;
        row.count_matches_formula = result.status == SolveStatus::proven && result.optimum == formula;
        rows_.push_back(std::move(row));
    }

    void solver_rows() {
        const int top = config_.solver_max_n;
        for (int r = 2; r <= 3; ++r)
            for (int k = 1; k <= r + 1; ++k)
                for (int n = r + k; n <= std::min(top, r == 2 ? 8 : 7); ++n)
                    solver_row(n, r, k, crossing_path_pattern({r, k}, OrderKind::linear),
                               ex_ordered_path_exact(n, r, k));
        for (int n = 5; n <= std::min(top, 7); ++n)
            solver_row(n, 2, 3, crossing_path_pattern({2, 3}, OrderKind::cyclic),
                       binom(n, 2) - binom(n - 2, 2));
        for (int k = 2; k <= 3; ++k)
            for (int n = std::max(2 * k, 5); n <= std::min(top, 8); ++n)
                solver_row(n, 2, k, crossing_matching_pattern({2, k}, OrderKind::cyclic),
                           std::int64_t{2} * (k - 1) * n - binom(2 * k - 1, 2));
        for (int n = 6; n <= std::min(top, 7); ++n)
            solver_row(n, 3, 2, crossing_matching_pattern({3, 2}, OrderKind::cyclic),
                       binom(n, 3) - binom(n - 3, 3));
    }

    const SuiteConfig& config_;
    std::vector<VerifyRow> rows_;
};

}  // namespace

SuiteResult verify_suite(const SuiteConfig& config) { return Suite(config).run(); }

}  // namespace oghx
