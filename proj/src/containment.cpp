#include "oghx/containment.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "oghx/combinatorics.hpp"

namespace oghx {

namespace {

void check_compatible(const Hypergraph& host, const Pattern& p) {
    if (host.order() != p.order)
        throw Error(ErrorCode::OrderKindMismatch, "host and pattern order kinds differ");
    if (host.r() != p.r)
        throw Error(ErrorCode::ArityMismatch, "host and pattern arities differ");
}

/// Backtracking over pattern positions in order. Each position gets a host
/// rank larger than its predecessor's; after every assignment the partial
/// image of each pattern edge through that position must lie inside some
/// host edge.
class Matcher {
public:
    Matcher(const Hypergraph& host, const Pattern& p)
        : host_(host), p_(p), index_(host), assign_(p.m, -1), checks_(p.m) {
        for (const auto& e : p.edges) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                std::vector<int> prefix(e.begin(), e.begin() + i + 1);
                checks_[e[i]].push_back(std::move(prefix));
            }
        }
    }

    void run(const std::function<bool(const Embedding&)>& visit) {
        visit_ = &visit;
        const int n = host_.n();
        if (p_.m > n || host_.size() < p_.edges.size()) return;
        if (host_.order() == OrderKind::linear) {
            cut_ = 0;
            extend(0, 0);
        } else {
            for (int s = 0; s < n && !stop_; ++s) {
                cut_ = s;
                assign_[0] = s;
                if (feasible(0)) extend(1, 1);
            }
        }
    }

private:
    int vertex_at(int rank) const {
        return host_.order() == OrderKind::linear ? rank : (cut_ + rank) % host_.n();
    }

    bool feasible(int pos) {
        for (const auto& prefix : checks_[pos]) {
            scratch_.clear();
            for (int q : prefix) scratch_.push_back(assign_[q]);
            if (!index_.contains_subset(scratch_)) return false;
        }
        return true;
    }

    void extend(int pos, int min_rank) {
        if (stop_) return;
        if (pos == p_.m) {
            Embedding emb{assign_, cut_};
            if (!(*visit_)(emb)) stop_ = true;
            return;
        }
        const int max_rank = host_.n() - (p_.m - pos);
        for (int rank = min_rank; rank <= max_rank && !stop_; ++rank) {
            assign_[pos] = vertex_at(rank);
            if (feasible(pos)) extend(pos + 1, rank + 1);
        }
        assign_[pos] = -1;
    }

    const Hypergraph& host_;
    const Pattern& p_;
    SubsetIndex index_;
    std::vector<int> assign_;
    std::vector<std::vector<std::vector<int>>> checks_;
    std::vector<int> scratch_;
    const std::function<bool(const Embedding&)>* visit_ = nullptr;
    int cut_ = 0;
    bool stop_ = false;
};

}  // namespace

std::vector<Edge> copy_edges(const Embedding& emb, const Pattern& p) {
    std::vector<Edge> result;
    result.reserve(p.edges.size());
    for (const auto& e : p.edges) {
        Edge image;
        image.reserve(e.size());
        for (int pos : e) image.push_back(emb.map[pos]);
        std::sort(image.begin(), image.end());
        result.push_back(std::move(image));
    }
    std::sort(result.begin(), result.end());
    return result;
}

void for_each_embedding(const Hypergraph& host, const Pattern& p,
                        const std::function<bool(const Embedding&)>& visit) {
    check_compatible(host, p);
    Matcher(host, p).run(visit);
}

std::optional<Embedding> find_embedding(const Hypergraph& host, const Pattern& p) {
    std::optional<Embedding> found;
    for_each_embedding(host, p, [&](const Embedding& emb) {
        found = emb;
        return false;
    });
    return found;
}

bool is_free(const Hypergraph& host, const Pattern& p) { return !find_embedding(host, p); }

std::int64_t count_copies(const Hypergraph& host, const Pattern& p) {
    std::set<std::vector<Edge>> copies;
    for_each_embedding(host, p, [&](const Embedding& emb) {
        copies.insert(copy_edges(emb, p));
        return true;
    });
    return static_cast<std::int64_t>(copies.size());
}

std::vector<std::vector<Edge>> enumerate_copies_complete(int n, int r, OrderKind order,
                                                         const Pattern& p) {
    if (p.order != order) throw Error(ErrorCode::OrderKindMismatch, "pattern order kind differs");
    if (p.r != r) throw Error(ErrorCode::ArityMismatch, "pattern arity differs");
    if (p.m > n)
        throw Error(ErrorCode::PatternTooLarge,
                    "pattern has " + std::to_string(p.m) + " vertices, host only " + std::to_string(n));

    // Every r-set is a host edge, so a copy is any cyclic/linear placement of
    // the m positions onto an m-subset.
    const int rotations = order == OrderKind::cyclic ? p.m : 1;
    std::vector<std::vector<Edge>> copies;
    Embedding emb;
    emb.map.resize(p.m);
    for_each_combination(n, p.m, [&](const std::vector<int>& support) {
        for (int t = 0; t < rotations; ++t) {
            for (int i = 0; i < p.m; ++i) emb.map[i] = support[(i + t) % p.m];
            copies.push_back(copy_edges(emb, p));
        }
        return true;
    });
    std::sort(copies.begin(), copies.end());
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    return copies;
}

std::vector<int> EndingEdgeState::tuple() const {
    const int r = static_cast<int>(edge.size());
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) out[i] = edge[(rotation + phase - 1 + i) % r];
    return out;
}

std::vector<EndingEdgeState> ending_edge_states(const Hypergraph& host, int k) {
    if (host.order() != OrderKind::cyclic)
        throw Error(ErrorCode::NotCyclic, "ending-edge states are defined on cyclic hosts");
    const int r = host.r();
    const int n = host.n();
    if (k < 1) throw Error(ErrorCode::ParamOutOfRange, "k must be >= 1");
    if (k > r) throw Error(ErrorCode::PhaseOutOfRange, "ending-edge recursion needs k <= r");

    std::set<EndingEdgeState> current;
    for (const auto& e : host.edges())
        for (int c = 0; c < r; ++c) current.insert(EndingEdgeState{e, c, 1});

    std::vector<int> w(r);
    for (int phase = 1; phase < k && !current.empty(); ++phase) {
        std::set<EndingEdgeState> next;
        for (const auto& state : current) {
            for (int i = 0; i < r; ++i) w[i] = state.edge[(state.rotation + i) % r];
            const int designated = w[phase - 1];
            const int successor = w[phase];
            for (int x = (designated + 1) % n; x != successor; x = (x + 1) % n) {
                Edge candidate = state.edge;
                std::replace(candidate.begin(), candidate.end(), designated, x);
                std::sort(candidate.begin(), candidate.end());
                if (!host.has_edge(candidate)) continue;
                const int first = phase - 1 == 0 ? x : w[0];
                const int rotation = static_cast<int>(
                    std::find(candidate.begin(), candidate.end(), first) - candidate.begin());
                next.insert(EndingEdgeState{std::move(candidate), rotation, phase + 1});
            }
        }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

bool contains_crossing_path_fast(const Hypergraph& host, int k) {
    if (k > host.r()) throw Error(ErrorCode::PhaseOutOfRange, "fast path test needs k <= r");
    return !ending_edge_states(host, k).empty();
}

bool alternates(const Edge& a, const Edge& b) {
    if (a.size() != b.size() || a.empty()) return false;
    const Edge& first = a.front() < b.front() ? a : b;
    const Edge& second = a.front() < b.front() ? b : a;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (!(first[i] < second[i])) return false;
        if (i + 1 < first.size() && !(second[i] < first[i + 1])) return false;
    }
    return true;
}

namespace {

bool extend_clique(const std::vector<std::vector<int>>& adj, std::vector<int>& candidates,
                   int need) {
    if (need == 0) return true;
    if (static_cast<int>(candidates.size()) < need) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const int v = candidates[i];
        std::vector<int> rest;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (std::binary_search(adj[v].begin(), adj[v].end(), candidates[j]))
                rest.push_back(candidates[j]);
        if (extend_clique(adj, rest, need - 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_crossing_matching_fast(const Hypergraph& host, int k) {
    if (k < 1) throw Error(ErrorCode::ParamOutOfRange, "k must be >= 1");
    const auto& edges = host.edges();
    const int count = static_cast<int>(edges.size());
    if (k == 1) return count > 0;
    std::vector<std::vector<int>> adj(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (alternates(edges[i], edges[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> all(count);
    for (int i = 0; i < count; ++i) all[i] = i;
    return extend_clique(adj, all, k);
}

}  // namespace oghx
