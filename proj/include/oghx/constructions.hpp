#pragma once

#include <utility>

#include "oghx/core.hpp"

namespace oghx {

/// Parameters chosen by gen_modular_slice.
struct GapParams {
    int k = 0;
    int m = 1;        // gap threshold in vertices
    int t = 1;        // divisor parameter t(r, k)
    int residue = 0;  // chosen class of edge sums mod m
    int n_used = 0;   // n' = t * floor(n / t) vertices actually used
};

/// r-sets with a consecutive pair among the first k-1 gap positions; for
/// k = r+1 also every r-set whose maximum is n-1. Linear order. Edge count
/// is C(n,r) - C(n-k+1,r).
Hypergraph gen_consecutive(int n, int r, int k, OrderKind order = OrderKind::linear);

/// r-sets whose second-minus-first vertex is 2^p, 0 <= p <= floor(log2(n/4)).
Hypergraph gen_pow2_gap(int n, int r, OrderKind order = OrderKind::linear);

/// Largest p with 2^p <= n/4, i.e. 4 * 2^p <= n.
int pow2_gap_max_exponent(int n);

/// True iff some k-1 cyclically consecutive gaps of `edge` all exceed m.
bool has_km_gaps(const Edge& edge, int n, int k, int m);

/// Cyclic family of all r-sets of [n] without (k,m)-gaps.
Hypergraph gen_gap_free(int n, int r, int k, int m);

/// Best residue class of edge sums among the gap-free sets on n' vertices.
std::pair<Hypergraph, GapParams> gen_modular_slice(int n, int r, int k);

/// Cyclic family of r-sets avoiding 0 and n-1 whose sorted labels
/// a_1 < ... < a_r have a_{i-1} + 1 = a_i for some 2 <= i <= r-1.
Hypergraph gen_interior_consecutive(int n, int r);

/// A ∪ B: r-sets meeting {0, ..., k-2}, or having a cyclic gap <= k-1.
Hypergraph gen_matching_lower(int n, int r, int k);

/// All r-sets containing vertex 0.
Hypergraph gen_star(int n, int r, OrderKind order = OrderKind::cyclic);

}  // namespace oghx
