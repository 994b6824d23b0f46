#include "oghx/patterns.hpp"

#include <algorithm>
#include <set>

namespace oghx {

Hypergraph Pattern::as_hypergraph() const { return Hypergraph(m, r, order, edges); }

std::vector<int> crossing_path_positions(int r, int k) {
    if (r < 2 || k < 1)
        throw Error(ErrorCode::ParamOutOfRange, "crossing path needs r >= 2 and k >= 1");
    const int m = r + k - 1;
    std::vector<int> position(m);
    int next = 0;
    for (int cls = 0; cls < r; ++cls)
        for (int i = cls; i < m; i += r) position[i] = next++;
    return position;
}

namespace {

void check_path_conditions(const std::vector<int>& pos, int r, int k) {
    const int m = r + k - 1;
    // v_0 < v_1 < ... < v_{r-1}
    for (int i = 0; i + 1 < r; ++i)
        if (!(pos[i] < pos[i + 1]))
            throw std::logic_error("crossing path order violates the base-edge condition");
    // v_j < v_{j+r} < v_{j+2r} < ... < v_{j+1} for j < r-1
    for (int j = 0; j + 1 < r; ++j) {
        int prev = pos[j];
        for (int i = j + r; i < m; i += r) {
            if (!(prev < pos[i]))
                throw std::logic_error("crossing path order violates a block condition");
            prev = pos[i];
        }
        if (!(prev < pos[j + 1]))
            throw std::logic_error("crossing path block does not precede the next class");
    }
    // For k <= r the order is v_0 < v_r < v_1 < v_{r+1} < ... < v_{k-1} < v_k < ... < v_{r-1}.
    if (k <= r) {
        std::vector<int> listing;
        for (int i = 0; i < k - 1; ++i) {
            listing.push_back(i);
            listing.push_back(r + i);
        }
        for (int i = k - 1; i < r; ++i) listing.push_back(i);
        for (std::size_t i = 0; i < listing.size(); ++i)
            if (pos[listing[i]] != static_cast<int>(i))
                throw std::logic_error("crossing path order disagrees with the short-path listing");
    }
}

void check_no_isolated(int m, const std::vector<Edge>& edges) {
    std::vector<bool> used(m, false);
    for (const auto& e : edges)
        for (int v : e) used[v] = true;
    for (int v = 0; v < m; ++v)
        if (!used[v])
            throw Error(ErrorCode::IsolatedVertex, "pattern vertex " + std::to_string(v) + " is in no edge");
}

}  // namespace

Pattern crossing_path_pattern(PathSpec spec, OrderKind order) {
    const auto pos = crossing_path_positions(spec.r, spec.k);
    check_path_conditions(pos, spec.r, spec.k);
    Pattern p;
    p.m = spec.r + spec.k - 1;
    p.r = spec.r;
    p.order = order;
    p.family = PatternFamily::crossing_path;
    p.k = spec.k;
    p.name = "crossing-path r=" + std::to_string(spec.r) + " k=" + std::to_string(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        Edge e;
        for (int j = i; j < i + spec.r; ++j) e.push_back(pos[j]);
        std::sort(e.begin(), e.end());
        p.edges.push_back(std::move(e));
    }
    return p;
}

Pattern crossing_matching_pattern(MatchingSpec spec, OrderKind order) {
    if (spec.r < 2 || spec.k < 1)
        throw Error(ErrorCode::ParamOutOfRange, "crossing matching needs r >= 2 and k >= 1");
    Pattern p;
    p.m = spec.r * spec.k;
    p.r = spec.r;
    p.order = order;
    p.family = PatternFamily::crossing_matching;
    p.k = spec.k;
    p.name = "crossing-matching r=" + std::to_string(spec.r) + " k=" + std::to_string(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        Edge e;
        for (int j = 0; j < spec.r; ++j) e.push_back(i + j * spec.k);
        p.edges.push_back(std::move(e));
    }
    return p;
}

Pattern custom_pattern(int m, OrderKind order, std::vector<Edge> edges, std::string name) {
    if (edges.empty()) throw Error(ErrorCode::ParamOutOfRange, "pattern needs at least one edge");
    const int r = static_cast<int>(edges.front().size());
    if (r < 1 || r > m) throw Error(ErrorCode::ParamOutOfRange, "pattern arity out of range");
    std::set<Edge> seen;
    for (const auto& e : edges) {
        validate_edge(e, m, r);
        if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateEdge, "duplicate pattern edge");
    }
    check_no_isolated(m, edges);
    Pattern p;
    p.m = m;
    p.r = r;
    p.order = order;
    p.edges = std::move(edges);
    p.name = std::move(name);
    p.k = static_cast<int>(p.edges.size());
    return p;
}

std::string serialize(const Pattern& p) {
    std::string text = serialize(p.as_hypergraph());
    auto header_end = text.find('\n', text.find('\n') + 1) + 1;
    text.insert(header_end, "# pattern: " + p.name + "\n");
    return text;
}

Pattern parse_pattern(std::string_view text) {
    auto parsed = parse_file(text);
    std::string name = "custom";
    for (const auto& [key, value] : parsed.annotations)
        if (key == "pattern") name = value;
    const auto& g = parsed.graph;
    return custom_pattern(g.n(), g.order(), g.edges(), name);
}

}  // namespace oghx
