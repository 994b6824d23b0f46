#include "oghx/constructions.hpp"

#include <map>

#include "oghx/bounds.hpp"
#include "oghx/combinatorics.hpp"

namespace oghx {

namespace {

template <typename Pred>
Hypergraph filter_all(int n, int r, OrderKind order, Pred&& keep) {
    std::vector<Edge> edges;
    for_each_combination(n, r, [&](const std::vector<int>& s) {
        if (keep(s)) edges.push_back(s);
        return true;
    });
    return Hypergraph(n, r, order, std::move(edges));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::ParamOutOfRange, what);
}

}  // namespace

Hypergraph gen_consecutive(int n, int r, int k, OrderKind order) {
    require(r >= 1 && k >= 1 && k <= r + 1 && r + 1 <= n,
            "gen_consecutive needs 1 <= k <= r+1 <= n");
    const int window = std::min(k, r);
    return filter_all(n, r, order, [&](const std::vector<int>& a) {
        for (int i = 0; i + 1 < window; ++i)
            if (a[i + 1] == a[i] + 1) return true;
        return k == r + 1 && a.back() == n - 1;
    });
}

int pow2_gap_max_exponent(int n) {
    int p = 0;
    while (std::int64_t{8} << p <= n) ++p;
    return p;
}

Hypergraph gen_pow2_gap(int n, int r, OrderKind order) {
    require(r >= 2 && n >= 8, "gen_pow2_gap needs r >= 2 and n >= 8");
    const int p_max = pow2_gap_max_exponent(n);
    return filter_all(n, r, order, [&](const std::vector<int>& a) {
        const int d = a[1] - a[0];
        return (d & (d - 1)) == 0 && d <= (1 << p_max);
    });
}

bool has_km_gaps(const Edge& edge, int n, int k, int m) {
    const int r = static_cast<int>(edge.size());
    const int run = k - 1;
    if (run < 1 || run > r) return false;
    std::vector<bool> big(r);
    for (int i = 0; i < r; ++i) {
        const int next = edge[(i + 1) % r];
        const int gap = ((next - edge[i]) % n + n) % n;
        big[i] = (r == 1 ? n : gap) > m;
    }
    for (int start = 0; start < r; ++start) {
        bool all = true;
        for (int j = 0; j < run && all; ++j) all = big[(start + j) % r];
        if (all) return true;
    }
    return false;
}

Hypergraph gen_gap_free(int n, int r, int k, int m) {
    require(n > r && r >= k && k >= 2, "gen_gap_free needs n > r >= k >= 2");
    require(m >= 0, "gap threshold must be nonnegative");
    return filter_all(n, r, OrderKind::cyclic,
                      [&](const std::vector<int>& a) { return !has_km_gaps(a, n, k, m); });
}

std::pair<Hypergraph, GapParams> gen_modular_slice(int n, int r, int k) {
    require(r >= 2 && k >= 2 && k <= r, "gen_modular_slice needs 2 <= k <= r");
    GapParams params;
    params.k = k;
    params.t = t_param(r, k);
    params.n_used = params.t * (n / params.t);
    require(params.n_used > r, "too few vertices after rounding n down to a multiple of t");
    params.m = params.n_used / params.t;

    const Hypergraph gap_free = gen_gap_free(params.n_used, r, k, params.m);
    std::map<int, std::vector<Edge>> by_residue;
    for (const auto& e : gap_free.edges()) by_residue[edge_sum_mod(e, params.m)].push_back(e);

    std::vector<Edge> best;
    for (auto& [residue, edges] : by_residue) {
        if (edges.size() > best.size()) {
            best = edges;
            params.residue = residue;
        }
    }
    // Vertices n'..n-1 stay isolated so the host keeps n vertices.
    return {Hypergraph(n, r, OrderKind::cyclic, std::move(best)), params};
}

Hypergraph gen_interior_consecutive(int n, int r) {
    require(r >= 3 && n >= r + 2, "gen_interior_consecutive needs r >= 3 and n >= r+2");
    return filter_all(n, r, OrderKind::cyclic, [&](const std::vector<int>& a) {
        if (a.front() == 0 || a.back() == n - 1) return false;
        for (int i = 1; i + 1 < r; ++i)
            if (a[i - 1] + 1 == a[i]) return true;
        return false;
    });
}

Hypergraph gen_matching_lower(int n, int r, int k) {
    require(n > r && r >= 2 && k >= 2, "gen_matching_lower needs n > r >= 2 and k >= 2");
    return filter_all(n, r, OrderKind::cyclic, [&](const std::vector<int>& a) {
        if (a.front() <= k - 2) return true;
        for (int i = 0; i < r; ++i) {
            const int gap = ((a[(i + 1) % r] - a[i]) % n + n) % n;
            if (gap <= k - 1) return true;
        }
        return false;
    });
}

Hypergraph gen_star(int n, int r, OrderKind order) {
    require(n >= r && r >= 2, "gen_star needs n >= r >= 2");
    return filter_all(n, r, order, [](const std::vector<int>& a) { return a.front() == 0; });
}

}  // namespace oghx
