#include "oghx/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "oghx/combinatorics.hpp"

namespace oghx {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ArityTooSmall: return "ArityTooSmall";
        case ErrorCode::NotCyclic: return "NotCyclic";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::OrderKindMismatch: return "OrderKindMismatch";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::PhaseOutOfRange: return "PhaseOutOfRange";
        case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorCode::OutOfTheoremRange: return "OutOfTheoremRange";
        case ErrorCode::EmptySizes: return "EmptySizes";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::OutOfMemory: return "OutOfMemory";
    }
    return "Unknown";
}

namespace {

std::string with_line(const std::string& message, std::optional<int> line) {
    if (!line) return message;
    return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<int> line)
    : std::runtime_error(std::string(to_string(code)) + ": " + with_line(message, line)),
      code_(code),
      line_(line) {}

std::string_view to_string(OrderKind order) {
    return order == OrderKind::linear ? "linear" : "cyclic";
}

OrderKind parse_order_kind(std::string_view text) {
    if (text == "linear") return OrderKind::linear;
    if (text == "cyclic") return OrderKind::cyclic;
    throw Error(ErrorCode::SyntaxError, "unknown order kind '" + std::string(text) + "'");
}

void validate_edge(const Edge& edge, int n, int r, std::optional<int> line) {
    if (static_cast<int>(edge.size()) != r)
        throw Error(ErrorCode::ArityMismatch,
                    "edge has " + std::to_string(edge.size()) + " vertices, expected " +
                        std::to_string(r),
                    line);
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (edge[i] < 0 || edge[i] >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "vertex " + std::to_string(edge[i]) + " not in [0, " +
                            std::to_string(n) + ")",
                        line);
        if (i > 0 && edge[i - 1] >= edge[i])
            throw Error(ErrorCode::NotStrictlyIncreasing, "edge vertices must strictly increase",
                        line);
    }
}

Hypergraph::Hypergraph(int n, int r, OrderKind order, std::vector<Edge> edges)
    : n_(n), r_(r), order_(order), edges_(std::move(edges)) {
    if (n < 1 || r < 1 || r > n)
        throw Error(ErrorCode::ParamOutOfRange,
                    "need n >= 1 and 1 <= r <= n (n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")");
    for (const auto& e : edges_) validate_edge(e, n_, r_);
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        std::string text;
        for (int v : *dup) text += (text.empty() ? "" : " ") + std::to_string(v);
        throw Error(ErrorCode::DuplicateEdge, "duplicate edge {" + text + "}");
    }
}

bool Hypergraph::has_edge(const Edge& edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge);
}

Hypergraph make_hypergraph(int n, int r, OrderKind order, std::vector<Edge> edges) {
    return Hypergraph(n, r, order, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r, OrderKind order) {
    std::vector<Edge> edges;
    for_each_combination(n, r, [&](const std::vector<int>& s) {
        edges.push_back(s);
        return true;
    });
    return Hypergraph(n, r, order, std::move(edges));
}

ShadowSet shadow(const Hypergraph& h) {
    if (h.r() < 2) throw Error(ErrorCode::ArityTooSmall, "shadow needs r >= 2");
    ShadowSet result;
    for (const auto& e : h.edges()) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            std::vector<int> face;
            face.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != skip) face.push_back(e[i]);
            result.insert(std::move(face));
        }
    }
    return result;
}

Hypergraph rotate(const Hypergraph& h, int s) {
    if (h.order() != OrderKind::cyclic)
        throw Error(ErrorCode::NotCyclic, "rotation is defined for cyclic hypergraphs only");
    const int n = h.n();
    const int shift = ((s % n) + n) % n;
    std::vector<Edge> edges;
    edges.reserve(h.size());
    for (const auto& e : h.edges()) {
        Edge moved(e.size());
        std::transform(e.begin(), e.end(), moved.begin(), [&](int v) { return (v + shift) % n; });
        std::sort(moved.begin(), moved.end());
        edges.push_back(std::move(moved));
    }
    return Hypergraph(n, h.r(), h.order(), std::move(edges));
}

int edge_sum_mod(const Edge& edge, int m) {
    if (m < 1) throw Error(ErrorCode::ParamOutOfRange, "modulus must be >= 1");
    std::int64_t sum = 0;
    for (int v : edge) sum += v;
    return static_cast<int>(((sum % m) + m) % m);
}

Hypergraph with_order(const Hypergraph& h, OrderKind order) {
    return Hypergraph(h.n(), h.r(), order, h.edges());
}

namespace {

constexpr std::string_view kMagic = "oghx v1";

std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

int header_value(std::string_view token, std::string_view key, int line) {
    if (token.substr(0, key.size()) != key)
        throw Error(ErrorCode::SyntaxError, "expected '" + std::string(key) + "<int>'", line);
    auto v = parse_int(token.substr(key.size()));
    if (!v) throw Error(ErrorCode::SyntaxError, "bad integer in '" + std::string(token) + "'", line);
    return *v;
}

}  // namespace

ParsedFile parse_file(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        throw Error(ErrorCode::SyntaxError, "file must end with a newline");

    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start < text.size();) {
        std::size_t end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.size() < 2) throw Error(ErrorCode::SyntaxError, "missing header", 1);
    if (lines[0] != kMagic)
        throw Error(ErrorCode::SyntaxError, "first line must be '" + std::string(kMagic) + "'", 1);

    auto header = split_ws(lines[1]);
    if (header.size() != 3) throw Error(ErrorCode::SyntaxError, "header must be 'n=<int> r=<int> order=<kind>'", 2);
    const int n = header_value(header[0], "n=", 2);
    const int r = header_value(header[1], "r=", 2);
    if (header[2].substr(0, 6) != "order=")
        throw Error(ErrorCode::SyntaxError, "expected 'order=<linear|cyclic>'", 2);
    OrderKind order;
    try {
        order = parse_order_kind(header[2].substr(6));
    } catch (const Error& e) {
        throw Error(ErrorCode::SyntaxError, e.what(), 2);
    }
    if (n < 1 || r < 1 || r > n)
        throw Error(ErrorCode::ParamOutOfRange, "need n >= 1 and 1 <= r <= n", 2);

    std::vector<Edge> edges;
    std::vector<std::pair<std::string, std::string>> annotations;
    std::set<Edge> seen;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        std::string_view line = lines[i];
        if (split_ws(line).empty()) continue;
        if (line.front() == '#') {
            std::string_view body = line.substr(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            auto colon = body.find(':');
            if (colon != std::string_view::npos) {
                std::string_view value = body.substr(colon + 1);
                while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
                annotations.emplace_back(std::string(body.substr(0, colon)), std::string(value));
            }
            continue;
        }
        Edge edge;
        for (auto token : split_ws(line)) {
            auto v = parse_int(token);
            if (!v) throw Error(ErrorCode::SyntaxError, "bad vertex '" + std::string(token) + "'", line_no);
            edge.push_back(*v);
        }
        validate_edge(edge, n, r, line_no);
        if (!seen.insert(edge).second) throw Error(ErrorCode::DuplicateEdge, "duplicate edge", line_no);
        edges.push_back(std::move(edge));
    }
    return ParsedFile{Hypergraph(n, r, order, std::move(edges)), std::move(annotations)};
}

Hypergraph parse_hypergraph(std::string_view text) { return parse_file(text).graph; }

std::string serialize(const Hypergraph& h) {
    std::ostringstream out;
    out << kMagic << '\n';
    out << "n=" << h.n() << " r=" << h.r() << " order=" << to_string(h.order()) << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    return parse_hypergraph(read_text_file(path));
}

SubsetIndex::SubsetIndex(const Hypergraph& h) : use_mask_(h.n() <= kMaskLimit) {
    const int r = h.r();
    for (const auto& e : h.edges()) {
        if (use_mask_) {
            for (unsigned bits = 1; bits < (1u << r); ++bits) {
                VertexMask mask;
                for (int i = 0; i < r; ++i)
                    if (bits >> i & 1u) mask.set(e[i]);
                mask_subsets_.insert(mask);
            }
            VertexMask full;
            for (int v : e) full.set(v);
            mask_edges_.insert(full);
        } else {
            for (unsigned bits = 1; bits < (1u << r); ++bits) {
                std::vector<int> sub;
                for (int i = 0; i < r; ++i)
                    if (bits >> i & 1u) sub.push_back(e[i]);
                vec_subsets_.insert(std::move(sub));
            }
            vec_edges_.insert(e);
        }
    }
}

bool SubsetIndex::contains_subset(const std::vector<int>& vertices) const {
    if (use_mask_) {
        VertexMask mask;
        for (int v : vertices) mask.set(v);
        return mask_subsets_.count(mask) > 0;
    }
    std::vector<int> key(vertices);
    std::sort(key.begin(), key.end());
    return vec_subsets_.count(key) > 0;
}

bool SubsetIndex::contains_edge(const std::vector<int>& vertices) const {
    if (use_mask_) {
        VertexMask mask;
        for (int v : vertices) mask.set(v);
        return mask_edges_.count(mask) > 0;
    }
    std::vector<int> key(vertices);
    std::sort(key.begin(), key.end());
    return vec_edges_.count(key) > 0;
}

}  // namespace oghx
