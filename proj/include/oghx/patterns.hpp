#pragma once

#include <string>
#include <vector>

#include "oghx/core.hpp"

namespace oghx {

enum class PatternFamily { crossing_path, crossing_matching, custom };

/// A small ordered or cyclic r-graph on positions 0..m-1. Position order is
/// the pattern's vertex order; for cyclic patterns the representative is cut
/// so that position 0 is the first vertex of the first edge's block.
///
/// `edges` keeps construction order (edge i of a path is the i-th path edge),
/// each edge sorted by position.
struct Pattern {
    int m = 0;
    int r = 0;
    OrderKind order = OrderKind::linear;
    std::vector<Edge> edges;
    std::string name;
    PatternFamily family = PatternFamily::custom;
    int k = 0;  // number of edges for path/matching families

    /// Hypergraph view (edges re-sorted lexicographically).
    Hypergraph as_hypergraph() const;
};

struct PathSpec {
    int r;
    int k;
};

struct MatchingSpec {
    int r;
    int k;
};

/// Position of path vertex v_i (0-based subscripts, 0 <= i < r+k-1) in the
/// crossing order: residue classes mod r form consecutive blocks in class
/// order, increasing inside each block.
std::vector<int> crossing_path_positions(int r, int k);

/// The crossing k-path on r+k-1 vertices; edge i is {v_i, ..., v_{i+r-1}}.
Pattern crossing_path_pattern(PathSpec spec, OrderKind order);

/// The crossing k-matching on rk vertices; edge i holds positions = i mod k.
Pattern crossing_matching_pattern(MatchingSpec spec, OrderKind order);

/// User-supplied pattern; rejects isolated positions and duplicate edges.
Pattern custom_pattern(int m, OrderKind order, std::vector<Edge> edges,
                       std::string name = "custom");

/// v1 text with a `# pattern: <name>` line after the header.
std::string serialize(const Pattern& p);
Pattern parse_pattern(std::string_view text);

}  // namespace oghx
