#include "oghx/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "oghx/combinatorics.hpp"
#include "oghx/constructions.hpp"
#include "oghx/containment.hpp"

namespace oghx {

std::string_view to_string(SolveStatus status) {
    return status == SolveStatus::proven ? "proven" : "timeout";
}

std::string SolveResult::to_json(const std::string& witness_file) const {
    nlohmann::ordered_json j;
    j["optimum"] = optimum;
    j["status"] = to_string(status);
    j["nodes"] = nodes;
    j["witness_file"] = witness_file.empty() ? nlohmann::ordered_json(nullptr)
                                             : nlohmann::ordered_json(witness_file);
    return j.dump();
}

namespace {

void check_copy_budget(std::int64_t estimate, std::size_t max_copies) {
    if (estimate > static_cast<std::int64_t>(max_copies))
        throw Error(ErrorCode::OutOfMemory,
                    "instance would hold about " + std::to_string(estimate) +
                        " pattern copies, over the limit of " + std::to_string(max_copies));
}

std::int64_t copy_estimate(int n, const Pattern& p) {
    const std::int64_t per_support = p.order == OrderKind::cyclic ? p.m : 1;
    return binom(n, p.m) * per_support;
}

ConflictInstance index_copies(int n, int r, OrderKind order, std::vector<Edge> ground,
                              const std::vector<std::vector<Edge>>& copies) {
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < ground.size(); ++i) index.emplace(ground[i], static_cast<int>(i));
    ConflictInstance inst{n, r, order, std::move(ground), {}};
    for (const auto& copy : copies) {
        std::vector<int> ids;
        ids.reserve(copy.size());
        bool inside = true;
        for (const auto& e : copy) {
            auto it = index.find(e);
            if (it == index.end()) {
                inside = false;
                break;
            }
            ids.push_back(it->second);
        }
        if (!inside) continue;
        std::sort(ids.begin(), ids.end());
        inst.copies.push_back(std::move(ids));
    }
    std::sort(inst.copies.begin(), inst.copies.end());
    inst.copies.erase(std::unique(inst.copies.begin(), inst.copies.end()), inst.copies.end());
    return inst;
}

}  // namespace

ConflictInstance build_conflicts(int n, int r, OrderKind order, const Pattern& p,
                                 std::size_t max_copies) {
    if (p.m > n) throw Error(ErrorCode::PatternTooLarge, "pattern does not fit in the host");
    check_copy_budget(copy_estimate(n, p), max_copies);
    auto copies = enumerate_copies_complete(n, r, order, p);
    return index_copies(n, r, order, complete_hypergraph(n, r, order).edges(), copies);
}

ConflictInstance build_interval_conflicts(const std::vector<int>& sizes, const Pattern& p,
                                          std::size_t max_copies) {
    if (sizes.empty()) throw Error(ErrorCode::EmptySizes, "no part sizes given");
    if (static_cast<int>(sizes.size()) != p.r)
        throw Error(ErrorCode::ParamOutOfRange, "need exactly r parts");
    if (p.order != OrderKind::linear)
        throw Error(ErrorCode::OrderKindMismatch, "interval hosts are linearly ordered");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw Error(ErrorCode::ParamOutOfRange, "part sizes must be positive");
        for (int j = 0; j < sizes[i]; ++j) part_of.push_back(static_cast<int>(i));
        n += sizes[i];
    }
    std::vector<Edge> ground;
    for_each_combination(n, p.r, [&](const std::vector<int>& s) {
        for (int i = 0; i < p.r; ++i)
            if (part_of[s[i]] != i) return true;
        ground.push_back(s);
        return true;
    });
    std::vector<std::vector<Edge>> copies;
    if (p.m <= n) {
        check_copy_budget(copy_estimate(n, p), max_copies);
        copies = enumerate_copies_complete(n, p.r, OrderKind::linear, p);
    }
    return index_copies(n, p.r, OrderKind::linear, std::move(ground), copies);
}

bool verify_witness(const Hypergraph& witness, const Pattern& p) { return is_free(witness, p); }

std::optional<Hypergraph> construction_seed(int n, const Pattern& p) {
    const int r = p.r;
    const int k = p.k;
    std::vector<Hypergraph> candidates;
    auto attempt = [&](auto&& make) {
        try {
            candidates.push_back(with_order(make(), p.order));
        } catch (const Error&) {
        }
    };
    if (p.family == PatternFamily::crossing_path) {
        if (k <= r + 1) attempt([&] { return gen_consecutive(n, r, k); });
        if (k >= r + 1) attempt([&] { return gen_consecutive(n, r, r + 1); });
        if (p.order == OrderKind::linear && k >= r + 2) attempt([&] { return gen_pow2_gap(n, r); });
        if (p.order == OrderKind::cyclic) {
            if (k >= 2 && k <= r) attempt([&] { return gen_modular_slice(n, r, k).first; });
            if (k == r) attempt([&] { return gen_interior_consecutive(n, r); });
            if (k >= 2 * r) attempt([&] { return gen_pow2_gap(n, r); });
        }
    } else if (p.family == PatternFamily::crossing_matching) {
        if (k == 2) attempt([&] { return gen_consecutive(n, r, r + 1); });
        if (k >= 2) attempt([&] { return gen_matching_lower(n, r, k); });
    }
    std::optional<Hypergraph> best;
    for (auto& c : candidates) {
        if (c.n() != n || c.r() != r) continue;
        if (best && c.size() <= best->size()) continue;
        if (verify_witness(c, p)) best = std::move(c);
    }
    return best;
}

namespace {

enum : std::int8_t { kFree = 0, kIn = 1, kOut = 2 };

struct Decision {
    int element;
    std::int8_t state;
};

using Clock = std::chrono::steady_clock;

struct SharedSearch {
    std::atomic<std::int64_t> best{0};
    std::atomic<bool> stop{false};
    std::atomic<std::int64_t> nodes{0};
    std::int64_t max_nodes = 0;
    double max_seconds = 0;
    Clock::time_point start = Clock::now();
};

/// Maximum subset of the ground set containing no copy completely. Branches
/// on the lexicographically first copy with no excluded element: child i
/// excludes that copy's i-th free element and keeps the earlier ones.
class BranchAndBound {
public:
    BranchAndBound(const ConflictInstance& inst, SharedSearch& shared)
        : inst_(inst),
          shared_(shared),
          state_(inst.ground.size(), kFree),
          copy_out_(inst.copies.size(), 0),
          copy_in_(inst.copies.size(), 0),
          element_copies_(inst.ground.size()),
          mark_(inst.ground.size(), 0) {
        for (std::size_t c = 0; c < inst.copies.size(); ++c)
            for (int e : inst.copies[c]) element_copies_[e].push_back(static_cast<int>(c));
    }

    std::int64_t nodes() const { return local_nodes_; }
    const std::vector<std::int8_t>& best_set() const { return best_set_; }
    std::int64_t local_best() const { return local_best_; }

    /// Applies decisions; returns false if they make some copy fully kept.
    bool apply_all(const std::vector<Decision>& decisions) {
        for (const auto& d : decisions) {
            if (d.state == kOut) exclude(d.element);
            else if (!include(d.element)) return false;
        }
        return true;
    }

    void search() {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        count_node();
        const int violated = first_violated();
        const std::int64_t size = static_cast<std::int64_t>(state_.size()) - out_count_;
        if (violated < 0) {
            offer(size);
            return;
        }
        if (size - packing_bound() <= shared_.best.load(std::memory_order_relaxed)) return;

        std::vector<int> free_elements;
        for (int e : inst_.copies[violated])
            if (state_[e] == kFree) free_elements.push_back(e);

        std::vector<int> kept;
        for (int e : free_elements) {
            exclude(e);
            search();
            unexclude(e);
            if (!include(e)) {
                uninclude(e);
                break;
            }
            kept.push_back(e);
        }
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) uninclude(*it);
    }

    /// Children of the current node as decision lists (empty if leaf or pruned).
    std::vector<std::vector<Decision>> children() {
        const int violated = first_violated();
        if (violated < 0) return {};
        std::vector<std::vector<Decision>> result;
        std::vector<Decision> prefix;
        for (int e : inst_.copies[violated]) {
            if (state_[e] != kFree) continue;
            auto child = prefix;
            child.push_back({e, kOut});
            result.push_back(std::move(child));
            prefix.push_back({e, kIn});
        }
        return result;
    }

    void reset() {
        std::fill(state_.begin(), state_.end(), kFree);
        std::fill(copy_out_.begin(), copy_out_.end(), 0);
        std::fill(copy_in_.begin(), copy_in_.end(), 0);
        out_count_ = 0;
    }

    /// Greedy maximal feasible set in ground order.
    std::vector<std::int8_t> greedy() {
        reset();
        for (std::size_t e = 0; e < state_.size(); ++e)
            if (!include(static_cast<int>(e))) {
                uninclude(static_cast<int>(e));
                exclude(static_cast<int>(e));
            }
        auto result = state_;
        reset();
        return result;
    }

    /// Records `set` as the local incumbent if it is feasible.
    bool feasible(const std::vector<std::int8_t>& set) const {
        for (const auto& copy : inst_.copies) {
            bool all = true;
            for (int e : copy) all = all && set[e] == kIn;
            if (all) return false;
        }
        return true;
    }

private:
    void count_node() {
        ++local_nodes_;
        const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.max_nodes > 0 && total >= shared_.max_nodes) shared_.stop = true;
        if (shared_.max_seconds > 0 && (local_nodes_ & 1023) == 0) {
            const std::chrono::duration<double> elapsed = Clock::now() - shared_.start;
            if (elapsed.count() >= shared_.max_seconds) shared_.stop = true;
        }
    }

    int first_violated() const {
        for (std::size_t c = 0; c < copy_out_.size(); ++c)
            if (copy_out_[c] == 0) return static_cast<int>(c);
        return -1;
    }

    // Pairwise disjoint (on free elements) violated copies; each forces at
    // least one more exclusion.
    std::int64_t packing_bound() {
        ++stamp_;
        std::int64_t count = 0;
        for (std::size_t c = 0; c < copy_out_.size(); ++c) {
            if (copy_out_[c] != 0) continue;
            bool disjoint = true;
            for (int e : inst_.copies[c])
                if (state_[e] == kFree && mark_[e] == stamp_) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (int e : inst_.copies[c])
                if (state_[e] == kFree) mark_[e] = stamp_;
            ++count;
        }
        return count;
    }

    void offer(std::int64_t size) {
        auto current = shared_.best.load(std::memory_order_relaxed);
        while (size > current) {
            if (shared_.best.compare_exchange_weak(current, size)) {
                local_best_ = size;
                best_set_.assign(state_.size(), kOut);
                for (std::size_t e = 0; e < state_.size(); ++e)
                    if (state_[e] != kOut) best_set_[e] = kIn;
                return;
            }
        }
    }

    void exclude(int e) {
        state_[e] = kOut;
        ++out_count_;
        for (int c : element_copies_[e]) ++copy_out_[c];
    }
    void unexclude(int e) {
        state_[e] = kFree;
        --out_count_;
        for (int c : element_copies_[e]) --copy_out_[c];
    }
    // Returns false if a copy becomes fully kept; the caller must still undo.
    bool include(int e) {
        state_[e] = kIn;
        bool ok = true;
        for (int c : element_copies_[e]) {
            ++copy_in_[c];
            if (copy_in_[c] == static_cast<int>(inst_.copies[c].size())) ok = false;
        }
        return ok;
    }
    void uninclude(int e) {
        state_[e] = kFree;
        for (int c : element_copies_[e]) --copy_in_[c];
    }

    const ConflictInstance& inst_;
    SharedSearch& shared_;
    std::vector<std::int8_t> state_;
    std::vector<int> copy_out_;
    std::vector<int> copy_in_;
    std::vector<std::vector<int>> element_copies_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::int64_t out_count_ = 0;
    std::int64_t local_nodes_ = 0;
    std::int64_t local_best_ = -1;
    std::vector<std::int8_t> best_set_;
};

int worker_count(const SolveOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("OGHX_THREADS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::int8_t> as_membership(const ConflictInstance& inst, const Hypergraph& h) {
    std::vector<std::int8_t> set(inst.ground.size(), kOut);
    for (std::size_t e = 0; e < inst.ground.size(); ++e)
        if (h.has_edge(inst.ground[e])) set[e] = kIn;
    return set;
}

Hypergraph to_hypergraph(const ConflictInstance& inst, const std::vector<std::int8_t>& set) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < inst.ground.size(); ++e)
        if (set[e] == kIn) edges.push_back(inst.ground[e]);
    return Hypergraph(inst.n, inst.r, inst.order, std::move(edges));
}

std::int64_t count_in(const std::vector<std::int8_t>& set) {
    return std::count(set.begin(), set.end(), kIn);
}

}  // namespace

SolveResult solve_instance(const ConflictInstance& inst, const Pattern& p, const SolveOptions& options) {
    SharedSearch shared;
    shared.max_nodes = options.budget.max_nodes;
    shared.max_seconds = options.budget.max_seconds;

    BranchAndBound root(inst, shared);

    // Incumbent: greedy completion, then any verified seed that beats it.
    std::vector<std::int8_t> incumbent = root.greedy();
    std::vector<Hypergraph> seeds = options.seeds;
    if (options.use_construction_seeds)
        if (auto seed = construction_seed(inst.n, p)) seeds.push_back(std::move(*seed));
    for (const auto& seed : seeds) {
        if (seed.n() != inst.n || seed.r() != inst.r) continue;
        auto set = as_membership(inst, seed);
        if (count_in(set) != static_cast<std::int64_t>(seed.size())) continue;  // edges outside ground
        if (count_in(set) <= count_in(incumbent) || !root.feasible(set)) continue;
        if (!verify_witness(with_order(seed, p.order), p)) continue;
        incumbent = std::move(set);
    }
    shared.best = count_in(incumbent);

    if (!options.parallel) {
        root.search();
        if (root.local_best() > count_in(incumbent)) incumbent = root.best_set();
    } else {
        // Frontier of subproblems, expanded breadth-first in branching order.
        const int threads = worker_count(options);
        std::vector<std::vector<Decision>> frontier{{}};
        for (int depth = 0; depth < 12 && frontier.size() < static_cast<std::size_t>(8 * threads); ++depth) {
            std::vector<std::vector<Decision>> next;
            bool expanded = false;
            for (const auto& path : frontier) {
                root.reset();
                if (!root.apply_all(path)) continue;
                auto kids = root.children();
                if (kids.empty()) {
                    next.push_back(path);
                    continue;
                }
                expanded = true;
                for (auto& kid : kids) {
                    auto full = path;
                    full.insert(full.end(), kid.begin(), kid.end());
                    next.push_back(std::move(full));
                }
            }
            frontier = std::move(next);
            if (!expanded) break;
        }
        root.reset();

        std::atomic<std::size_t> next_task{0};
        std::mutex result_mutex;
        std::map<std::size_t, std::vector<std::int8_t>> found;
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                BranchAndBound engine(inst, shared);
                for (std::size_t task; (task = next_task.fetch_add(1)) < frontier.size();) {
                    engine.reset();
                    if (!engine.apply_all(frontier[task])) continue;
                    const auto before = engine.local_best();
                    engine.search();
                    if (engine.local_best() > before) {
                        std::lock_guard lock(result_mutex);
                        found[task] = engine.best_set();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& [task, set] : found)
            if (count_in(set) > count_in(incumbent)) incumbent = set;
    }

    SolveResult result;
    result.optimum = count_in(incumbent);
    result.witness = to_hypergraph(inst, incumbent);
    result.nodes = shared.nodes.load();
    result.status = shared.stop.load() ? SolveStatus::timeout : SolveStatus::proven;
    return result;
}

SolveResult solve_exact(int n, int r, OrderKind order, const Pattern& p, const SolveOptions& options) {
    if (p.order != order) throw Error(ErrorCode::OrderKindMismatch, "pattern order kind differs");
    if (p.r != r) throw Error(ErrorCode::ArityMismatch, "pattern arity differs");
    if (r > n) throw Error(ErrorCode::ParamOutOfRange, "need r <= n");
    if (p.m > n) {
        // No copy fits: every r-set may be kept.
        SolveResult result;
        result.witness = complete_hypergraph(n, r, order);
        result.optimum = static_cast<std::int64_t>(result.witness.size());
        return result;
    }
    return solve_instance(build_conflicts(n, r, order, p, options.budget.max_copies), p, options);
}

SolveResult solve_interval(const std::vector<int>& sizes, const Pattern& p, const SolveOptions& options) {
    SolveOptions local = options;
    local.use_construction_seeds = false;
    return solve_instance(build_interval_conflicts(sizes, p, options.budget.max_copies), p, local);
}

}  // namespace oghx
