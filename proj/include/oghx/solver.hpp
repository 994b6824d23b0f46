#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oghx/core.hpp"
#include "oghx/patterns.hpp"

namespace oghx {

/// Candidate host edges plus every pattern copy among them, as sorted index
/// lists. Copies are deduplicated and sorted lexicographically.
struct ConflictInstance {
    int n = 0;
    int r = 0;
    OrderKind order = OrderKind::linear;
    std::vector<Edge> ground;
    std::vector<std::vector<int>> copies;
};

constexpr std::size_t kDefaultMaxCopies = 20'000'000;

ConflictInstance build_conflicts(int n, int r, OrderKind order, const Pattern& p,
                                 std::size_t max_copies = kDefaultMaxCopies);

/// Ground restricted to r-sets with one vertex in each consecutive part.
ConflictInstance build_interval_conflicts(const std::vector<int>& sizes, const Pattern& p,
                                          std::size_t max_copies = kDefaultMaxCopies);

enum class SolveStatus { proven, timeout };

std::string_view to_string(SolveStatus status);

struct SolveBudget {
    std::int64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0;      // 0 = unlimited
    std::size_t max_copies = kDefaultMaxCopies;
};

struct SolveOptions {
    SolveBudget budget;
    bool parallel = false;
    int threads = 0;  // 0: OGHX_THREADS, else hardware concurrency
    /// Seed the incumbent with engine-verified constructions matching the
    /// pattern family.
    bool use_construction_seeds = true;
    /// Extra incumbent candidates; each is verified before use.
    std::vector<Hypergraph> seeds;
};

struct SolveResult {
    std::int64_t optimum = 0;
    Hypergraph witness{1, 1, OrderKind::linear, {}};
    std::int64_t nodes = 0;
    SolveStatus status = SolveStatus::proven;

    std::string to_json(const std::string& witness_file = "") const;
};

SolveResult solve_instance(const ConflictInstance& inst, const Pattern& p,
                           const SolveOptions& options = {});

SolveResult solve_exact(int n, int r, OrderKind order, const Pattern& p,
                        const SolveOptions& options = {});

SolveResult solve_interval(const std::vector<int>& sizes, const Pattern& p,
                           const SolveOptions& options = {});

/// True iff the witness is pattern-free.
bool verify_witness(const Hypergraph& witness, const Pattern& p);

/// The largest engine-verified construction for the pattern's family on n
/// vertices, if any applies.
std::optional<Hypergraph> construction_seed(int n, const Pattern& p);

}  // namespace oghx
