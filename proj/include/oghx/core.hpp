#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "oghx/error.hpp"

namespace oghx {

/// Linear order 0 < 1 < ... < n-1, or the clockwise cyclic order
/// 0, 1, ..., n-1, 0.
enum class OrderKind { linear, cyclic };

std::string_view to_string(OrderKind order);
OrderKind parse_order_kind(std::string_view text);

/// Strictly increasing vertex labels in [0, n).
using Edge = std::vector<int>;

/// Validates `edge` against arity and range; throws Error.
void validate_edge(const Edge& edge, int n, int r, std::optional<int> line = std::nullopt);

/// An r-uniform hypergraph on vertices 0..n-1 with a linear or cyclic order.
/// Immutable once built; edges are kept in lexicographic order.
class Hypergraph {
public:
    Hypergraph(int n, int r, OrderKind order, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    OrderKind order() const noexcept { return order_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    bool has_edge(const Edge& edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int r_;
    OrderKind order_;
    std::vector<Edge> edges_;
};

/// Validated construction. Duplicate edges are rejected, not merged.
Hypergraph make_hypergraph(int n, int r, OrderKind order, std::vector<Edge> edges);

/// All r-subsets of [n].
Hypergraph complete_hypergraph(int n, int r, OrderKind order);

/// The (r-1)-shadow: every (r-1)-set contained in some edge.
using ShadowSet = std::set<std::vector<int>>;

ShadowSet shadow(const Hypergraph& h);

/// Relabels v -> (v + s) mod n. Requires a cyclic hypergraph.
Hypergraph rotate(const Hypergraph& h, int s);

/// Sum of the edge's vertices modulo m.
int edge_sum_mod(const Edge& edge, int m);

/// Same vertex set and edges, with the other order kind.
Hypergraph with_order(const Hypergraph& h, OrderKind order);

// Text format "oghx v1".

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& h);

/// Parsed file plus any `# key: value` comment lines, in file order.
struct ParsedFile {
    Hypergraph graph;
    std::vector<std::pair<std::string, std::string>> annotations;
};
ParsedFile parse_file(std::string_view text);

Hypergraph read_hypergraph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Vertex subset of [0, 128) as a two-word bitmask.
struct VertexMask {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    void set(int v) {
        if (v < 64) lo |= std::uint64_t{1} << v;
        else hi |= std::uint64_t{1} << (v - 64);
    }
    friend bool operator==(const VertexMask&, const VertexMask&) = default;
};

struct VertexMaskHash {
    std::size_t operator()(const VertexMask& m) const noexcept {
        return std::hash<std::uint64_t>{}(m.lo * 0x9E3779B97F4A7C15ULL ^ m.hi);
    }
};

/// Membership index over every nonempty subset of every edge of a host.
/// Uses bitmask keys when n <= 128 and sorted-vector keys otherwise.
class SubsetIndex {
public:
    static constexpr int kMaskLimit = 128;

    explicit SubsetIndex(const Hypergraph& h);

    /// True iff `vertices` (distinct, any order) lies inside some edge.
    bool contains_subset(const std::vector<int>& vertices) const;
    /// True iff `vertices` (distinct, any order) is exactly an edge.
    bool contains_edge(const std::vector<int>& vertices) const;

    bool uses_mask() const noexcept { return use_mask_; }

private:
    bool use_mask_;
    std::unordered_set<VertexMask, VertexMaskHash> mask_subsets_;
    std::unordered_set<VertexMask, VertexMaskHash> mask_edges_;
    std::set<std::vector<int>> vec_subsets_;
    std::set<std::vector<int>> vec_edges_;
};

}  // namespace oghx
