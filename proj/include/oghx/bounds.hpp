#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oghx/core.hpp"

namespace oghx {

enum class BoundFamily { path, matching };

std::string_view to_string(BoundFamily family);

struct TaggedValue {
    std::int64_t value = 0;
    std::string source;
};

/// Exact value and/or numeric bounds for an extremal function, each tagged
/// with the result or construction it comes from.
struct BoundReport {
    int n = 0;
    int r = 0;
    int k = 0;
    BoundFamily family = BoundFamily::path;
    OrderKind order = OrderKind::cyclic;
    std::optional<std::int64_t> exact;
    std::optional<TaggedValue> lower;
    std::optional<TaggedValue> upper;
    std::string asymptotic_note;

    /// Flat JSON object.
    std::string to_json() const;
};

/// C(n,r) - C(n-k+1,r), valid for 1 <= k <= r+1 and n >= r+k.
std::int64_t ex_ordered_path_exact(int n, int r, int k);

/// Upper bound from the three-term recurrence
///   C(n-2,r-2) + ex(n-2, r-1, k-1) + ex(n-1, r, k).
std::int64_t ex_ordered_path_recurrence_ub(int n, int r, int k);

/// k * prod(n_i) * sum(1/n_i), which is the integer k * sum_i prod_{j != i} n_j.
std::int64_t interval_bound(const std::vector<int>& sizes, int k);

BoundReport ex_ordered_path_report(int n, int r, int k);
BoundReport ex_cg_path_report(int n, int r, int k);
BoundReport ex_cg_matching_report(int n, int r, int k,
                                  OrderKind order = OrderKind::cyclic);

/// Exact rational p/q with q > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ZigzagCertificate {
    std::int64_t edges = 0;
    Rational bound;  // (k-1)(r-1)/r * |shadow|
    bool holds = false;
};

/// e(H) against (k-1)(r-1)/r |∂H|. When `holds` is false the host must
/// contain a crossing k-path.
ZigzagCertificate zigzag_certificate(const Hypergraph& h, int k);

/// |T_k(H)|: distinct ending tuples of crossing k-paths, found by enumerating
/// every embedding of the pattern.
std::int64_t tk_count(const Hypergraph& h, int k);

/// The labels e \ {min e} and e \ {max e} over all edges are pairwise
/// distinct. Throws PreconditionViolated if the host contains a crossing 2-path.
bool p2_injectivity_check(const Hypergraph& h);

/// t(r,k) = ceil((r-1)(k-1) / ln 2r).
int t_param(int r, int k);

/// (n-1) ln(2r) / ((r-1)(k-1)), held as an outward-rounded interval.
struct GapThreshold {
    long double lo = 0;
    long double hi = 0;

    /// Conservative: true only if m is at least the interval's upper end.
    bool met_by(std::int64_t m) const { return static_cast<long double>(m) >= hi; }
    /// Smallest integer certainly at or above the threshold.
    std::int64_t ceil() const;
    long double approx() const { return (lo + hi) / 2; }
};

GapThreshold gap_threshold(int n, int r, int k);

}  // namespace oghx
