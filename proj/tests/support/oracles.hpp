#pragma once

// Independent reference implementations for tests. Everything here is
// deliberately naive: no shared code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oghx/core.hpp"
#include "oghx/patterns.hpp"

namespace oracle {

using Edges = std::vector<std::vector<int>>;

// Pascal's triangle.
inline std::int64_t choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t[n][k];
}

// All k-subsets of [n] by bitmask filtering.
inline Edges subsets(int n, int k) {
    Edges out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff the sequence appears in clockwise order: read cyclically, it has
// at most one descent.
inline bool cyclically_increasing(const std::vector<int>& seq) {
    int descents = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] > seq[(i + 1) % seq.size()]) ++descents;
    return seq.size() <= 1 || descents == 1;
}

inline bool order_ok(const std::vector<int>& image, oghx::OrderKind order) {
    if (order == oghx::OrderKind::linear) return std::is_sorted(image.begin(), image.end());
    return cyclically_increasing(image);
}

// Every injection [m] -> [n], checked against the order and the edges.
// Calls fn(image) for each valid vertex map.
inline void for_each_injection(const oghx::Hypergraph& host, const oghx::Pattern& p,
                               const std::function<void(const std::vector<int>&)>& fn) {
    std::set<std::vector<int>> edges(host.edges().begin(), host.edges().end());
    std::vector<int> image(p.m, -1);
    std::vector<bool> used(host.n(), false);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == p.m) {
            if (!order_ok(image, host.order())) return;
            for (const auto& e : p.edges) {
                std::vector<int> mapped;
                for (int x : e) mapped.push_back(image[x]);
                std::sort(mapped.begin(), mapped.end());
                if (!edges.count(mapped)) return;
            }
            fn(image);
            return;
        }
        for (int v = 0; v < host.n(); ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[pos] = v;
            rec(pos + 1);
            used[v] = false;
        }
    };
    rec(0);
}

inline std::set<Edges> copies(const oghx::Hypergraph& host, const oghx::Pattern& p) {
    std::set<Edges> out;
    for_each_injection(host, p, [&](const std::vector<int>& image) {
        Edges c;
        for (const auto& e : p.edges) {
            std::vector<int> mapped;
            for (int x : e) mapped.push_back(image[x]);
            std::sort(mapped.begin(), mapped.end());
            c.push_back(mapped);
        }
        std::sort(c.begin(), c.end());
        out.insert(c);
    });
    return out;
}

inline bool contains(const oghx::Hypergraph& host, const oghx::Pattern& p) {
    return !copies(host, p).empty();
}

inline std::set<std::vector<int>> shadow(const oghx::Hypergraph& h) {
    std::set<std::vector<int>> out;
    for (const auto& e : h.edges())
        for (std::size_t drop = 0; drop < e.size(); ++drop) {
            std::vector<int> f;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != drop) f.push_back(e[i]);
            out.insert(f);
        }
    return out;
}

// Maximum pattern-free subfamily of the complete host by exhaustive subset
// search. Only for C(n,r) <= 22.
inline std::int64_t brute_ex(int n, int r, oghx::OrderKind order, const oghx::Pattern& p) {
    const auto ground = subsets(n, r);
    const int g = static_cast<int>(ground.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < g; ++i) index[ground[i]] = i;
    std::vector<std::uint32_t> masks;
    for (const auto& c : copies(oghx::Hypergraph(n, r, order, ground), p)) {
        std::uint32_t m = 0;
        for (const auto& e : c) m |= 1u << index[e];
        masks.push_back(m);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g); ++s) {
        const int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (auto m : masks)
            if ((s & m) == m) {
                ok = false;
                break;
            }
        if (ok) best = size;
    }
    return best;
}

inline oghx::Hypergraph random_host(std::mt19937_64& rng, int n, int r, oghx::OrderKind order,
                                    double density) {
    std::bernoulli_distribution keep(density);
    Edges edges;
    for (const auto& e : subsets(n, r))
        if (keep(rng)) edges.push_back(e);
    return oghx::Hypergraph(n, r, order, edges);
}

// Position order check for a crossing path: conditions (i) and (ii) of the
// definition, plus the explicit listing for k <= r.
inline bool crossing_path_order_ok(const std::vector<int>& pos, int r, int k) {
    const int m = r + k - 1;
    for (int i = 0; i + 1 < std::min(r, m); ++i)
        if (!(pos[i] < pos[i + 1])) return false;
    for (int j = 0; j < r - 1 && j + 1 < m; ++j) {
        std::vector<int> chain;
        for (int i = j; i < m; i += r) chain.push_back(pos[i]);
        chain.push_back(pos[j + 1]);
        if (!std::is_sorted(chain.begin(), chain.end())) return false;
    }
    if (k <= r) {
        std::vector<int> listing;
        for (int i = 0; i < k; ++i) {
            listing.push_back(i);
            if (i + r < m) listing.push_back(i + r);
        }
        for (int i = k; i < r; ++i) listing.push_back(i);
        for (std::size_t i = 0; i + 1 < listing.size(); ++i)
            if (!(pos[listing[i]] < pos[listing[i + 1]])) return false;
    }
    return true;
}

}  // namespace oracle
