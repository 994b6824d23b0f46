#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oghx/core.hpp"
#include "oghx/patterns.hpp"

namespace oghx {

/// Order-preserving injection of pattern positions into host vertices.
/// For cyclic hosts `rotation` is the host vertex the cut starts at (the
/// image of position 0); for linear hosts it is 0.
struct Embedding {
    std::vector<int> map;
    int rotation = 0;
};

/// Host edges hit by the embedding, lexicographically sorted.
std::vector<Edge> copy_edges(const Embedding& emb, const Pattern& p);

/// Visits every embedding exactly once (cyclic: once per vertex map, not
/// once per host cut). Stops when `visit` returns false.
void for_each_embedding(const Hypergraph& host, const Pattern& p,
                        const std::function<bool(const Embedding&)>& visit);

std::optional<Embedding> find_embedding(const Hypergraph& host, const Pattern& p);
bool is_free(const Hypergraph& host, const Pattern& p);

/// Number of distinct copies, a copy being the set of host edges it uses.
std::int64_t count_copies(const Hypergraph& host, const Pattern& p);

/// Every copy of `p` in the complete r-graph on n vertices, as sorted edge
/// lists, deduplicated and lexicographically ordered.
std::vector<std::vector<Edge>> enumerate_copies_complete(int n, int r, OrderKind order,
                                                         const Pattern& p);

/// Labelled ending edge of a crossing path. With u the sorted edge, the
/// clockwise labelling is w_i = u[(rotation + i) mod r]; at phase j the
/// ending tuple (v_j, ..., v_{r+j-1}) starts at w_{j-1}.
struct EndingEdgeState {
    Edge edge;
    int rotation = 0;
    int phase = 1;

    /// The ending tuple (v_j, ..., v_{r+j-1}) in path order.
    std::vector<int> tuple() const;

    friend auto operator<=>(const EndingEdgeState&, const EndingEdgeState&) = default;
};

/// T_k by dynamic programming over ending edges (cyclic host, 1 <= k <= r).
std::vector<EndingEdgeState> ending_edge_states(const Hypergraph& host, int k);

/// True iff T_k is nonempty, i.e. the cyclic host contains a crossing k-path.
/// Throws PhaseOutOfRange for k > r; callers fall back to the generic matcher.
bool contains_crossing_path_fast(const Hypergraph& host, int k);

/// Crossing k-matching test through pairwise alternation of disjoint edges.
/// Valid for both order kinds.
bool contains_crossing_matching_fast(const Hypergraph& host, int k);

/// True iff disjoint sorted sets a and b strictly alternate when merged.
bool alternates(const Edge& a, const Edge& b);

}  // namespace oghx
