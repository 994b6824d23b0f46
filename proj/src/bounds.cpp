#include "oghx/bounds.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include "oghx/combinatorics.hpp"
#include "oghx/constructions.hpp"
#include "oghx/containment.hpp"
#include "oghx/patterns.hpp"

namespace oghx {

std::string_view to_string(BoundFamily family) {
    return family == BoundFamily::path ? "path" : "matching";
}

std::string BoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["r"] = r;
    j["k"] = k;
    j["family"] = to_string(family);
    j["order"] = to_string(order);
    j["exact"] = exact ? nlohmann::ordered_json(*exact) : nlohmann::ordered_json(nullptr);
    j["lower"] = lower ? nlohmann::ordered_json(lower->value) : nlohmann::ordered_json(nullptr);
    j["lower_source"] = lower ? nlohmann::ordered_json(lower->source) : nlohmann::ordered_json(nullptr);
    j["upper"] = upper ? nlohmann::ordered_json(upper->value) : nlohmann::ordered_json(nullptr);
    j["upper_source"] = upper ? nlohmann::ordered_json(upper->source) : nlohmann::ordered_json(nullptr);
    j["asymptotic_note"] = asymptotic_note;
    return j.dump();
}

std::int64_t ex_ordered_path_exact(int n, int r, int k) {
    if (r < 1 || k < 1) throw Error(ErrorCode::ParamOutOfRange, "need r >= 1 and k >= 1");
    if (k > r + 1) throw Error(ErrorCode::OutOfTheoremRange, "closed form holds for k <= r+1 only");
    if (n < r + k) throw Error(ErrorCode::OutOfTheoremRange, "closed form holds for n >= r+k only");
    return binom(n, r) - binom(n - k + 1, r);
}

namespace {

std::int64_t recurrence(int n, int r, int k) {
    if (k == 1) return 0;
    if (n < r + k - 1) return binom(n, r);
    if (r == 1 && k == 2) return 1;
    return binom(n - 2, r - 2) + recurrence(n - 2, r - 1, k - 1) + recurrence(n - 1, r, k);
}

}  // namespace

std::int64_t ex_ordered_path_recurrence_ub(int n, int r, int k) {
    if (k < 2 || r < 1 || k > r + 1 || n < r + k)
        throw Error(ErrorCode::ParamOutOfRange, "recurrence needs 2 <= k <= r+1 and n >= r+k");
    return recurrence(n, r, k);
}

std::int64_t interval_bound(const std::vector<int>& sizes, int k) {
    if (sizes.empty()) throw Error(ErrorCode::EmptySizes, "no part sizes given");
    for (int s : sizes)
        if (s < 1) throw Error(ErrorCode::ParamOutOfRange, "part sizes must be positive");
    __int128 total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        __int128 product = 1;
        for (std::size_t j = 0; j < sizes.size(); ++j)
            if (j != i) product *= sizes[j];
        total += product;
    }
    return static_cast<std::int64_t>(total * k);
}

namespace {

/// Trivial ceiling: every r-set, minus one if a copy fits at all.
std::int64_t trivial_upper(int n, int r, int pattern_vertices) {
    return binom(n, r) - (n >= pattern_vertices ? 1 : 0);
}

void raise_lower(BoundReport& report, std::int64_t value, const std::string& source) {
    if (!report.lower || value > report.lower->value) report.lower = TaggedValue{value, source};
}

void lower_upper(BoundReport& report, std::int64_t value, const std::string& source) {
    if (!report.upper || value < report.upper->value) report.upper = TaggedValue{value, source};
}

void set_exact(BoundReport& report, std::int64_t value, const std::string& source) {
    report.exact = value;
    report.lower = TaggedValue{value, source};
    report.upper = TaggedValue{value, source};
}

std::int64_t consecutive_count(int n, int r, int k) {
    return binom(n, r) - binom(n - k + 1, r);
}

}  // namespace

BoundReport ex_ordered_path_report(int n, int r, int k) {
    if (r < 2 || k < 1 || n < r)
        throw Error(ErrorCode::ParamOutOfRange, "need r >= 2, k >= 1, n >= r");
    BoundReport report{n, r, k, BoundFamily::path, OrderKind::linear, {}, {}, {}, {}};
    const int m = r + k - 1;
    if (n < m) {
        set_exact(report, binom(n, r), "trivial:pattern-larger-than-host");
    } else if (k <= r + 1 && n >= r + k) {
        set_exact(report, ex_ordered_path_exact(n, r, k), "exact:ordered-crossing-path-formula");
    } else if (k <= r + 1) {
        set_exact(report, binom(n, r) - 1, "trivial:unique-placement");
    } else {
        raise_lower(report, consecutive_count(n, r, r + 1), "lower:consecutive-family-k=r+1");
        if (n >= 8) raise_lower(report, gen_pow2_gap(n, r).size(), "lower:power-of-two-gap-family");
        lower_upper(report, trivial_upper(n, r, m), "trivial:all-r-sets");
        report.asymptotic_note = "Theta(n^(r-1) log n)";
    }
    return report;
}

BoundReport ex_cg_path_report(int n, int r, int k) {
    if (r < 2 || k < 1 || n < r)
        throw Error(ErrorCode::ParamOutOfRange, "need r >= 2, k >= 1, n >= r");
    BoundReport report{n, r, k, BoundFamily::path, OrderKind::cyclic, {}, {}, {}, {}};
    const int m = r + k - 1;
    if (k == 1) {
        set_exact(report, 0, "trivial:single-edge-pattern");
        return report;
    }
    if (n < m) {
        set_exact(report, binom(n, r), "trivial:pattern-larger-than-host");
        return report;
    }
    if (k == r + 1) {
        if (n >= 2 * r + 1) {
            set_exact(report, binom(n, r) - binom(n - r, r), "exact:cg-crossing-path-k=r+1");
        } else {
            raise_lower(report, consecutive_count(n, r, r + 1), "lower:consecutive-family-k=r+1");
            lower_upper(report, trivial_upper(n, r, m), "trivial:all-r-sets");
        }
        return report;
    }
    if (k <= r) {
        const std::int64_t shadow_max = binom(n, r - 1);
        lower_upper(report, (std::int64_t{k - 1} * (r - 1) * shadow_max) / r,
                    "upper:zigzag-shadow-bound");
        if (k == 2) lower_upper(report, shadow_max / 2, "upper:two-label-injection");
        lower_upper(report, trivial_upper(n, r, m), "trivial:all-r-sets");

        const int t = t_param(r, k);
        if (t * (n / t) > r)
            raise_lower(report, gen_modular_slice(n, r, k).first.size(), "lower:modular-slice");
        if (k == r && r >= 3 && n >= r + 2)
            raise_lower(report, gen_interior_consecutive(n, r).size(), "lower:interior-consecutive");
        if (!report.lower) report.lower = TaggedValue{0, "trivial:empty"};
        report.asymptotic_note = "Theta(n^(r-1))";
        return report;
    }
    // k >= r+2: every crossing k-path contains a crossing (r+1)-path.
    raise_lower(report, consecutive_count(n, r, r + 1), "lower:consecutive-family-k=r+1");
    if (k >= 2 * r && n >= 8)
        raise_lower(report, gen_pow2_gap(n, r, OrderKind::cyclic).size(),
                    "lower:power-of-two-gap-family");
    report.asymptotic_note = k >= 2 * r ? "Theta(n^(r-1) log n)" : "Theta(n^(r-1))";
    return report;
}

BoundReport ex_cg_matching_report(int n, int r, int k, OrderKind order) {
    if (k < 2 || r < 2 || n < std::max(r * k, 2 * k - 1))
        throw Error(ErrorCode::ParamOutOfRange, "need k >= 2, r >= 2, n >= max(rk, 2k-1)");
    BoundReport report{n, r, k, BoundFamily::matching, order, {}, {}, {}, {}};
    if (k == 2) {
        set_exact(report, binom(n, r) - binom(n - r, r), "exact:crossing-2-matching-formula");
    } else if (r == 2) {
        set_exact(report, std::int64_t{2} * (k - 1) * n - binom(2 * k - 1, 2),
                  "exact:chord-matching-formula");
    } else {
        raise_lower(report, gen_matching_lower(n, r, k).size(), "lower:matching-a-union-b");
        lower_upper(report, std::int64_t{2} * (k - 1) * (r - 1) * binom(n, r - 1),
                    "upper:chord-type-bound");
    }
    return report;
}

ZigzagCertificate zigzag_certificate(const Hypergraph& h, int k) {
    if (h.order() != OrderKind::cyclic) throw Error(ErrorCode::NotCyclic, "needs a cyclic host");
    if (k < 1 || k > h.r()) throw Error(ErrorCode::ParamOutOfRange, "needs 1 <= k <= r");
    const std::int64_t r = h.r();
    const std::int64_t faces = static_cast<std::int64_t>(shadow(h).size());
    ZigzagCertificate cert;
    cert.edges = static_cast<std::int64_t>(h.size());
    std::int64_t num = (k - 1) * (r - 1) * faces;
    std::int64_t den = r;
    const std::int64_t g = std::gcd(num, den);
    cert.bound = Rational{num / (g ? g : 1), den / (g ? g : 1)};
    cert.holds = r * cert.edges <= (k - 1) * (r - 1) * faces;
    return cert;
}

std::int64_t tk_count(const Hypergraph& h, int k) {
    if (h.order() != OrderKind::cyclic) throw Error(ErrorCode::NotCyclic, "needs a cyclic host");
    const int r = h.r();
    if (r < 2 || k < 1 || k > r) throw Error(ErrorCode::ParamOutOfRange, "needs r >= 2 and 1 <= k <= r");
    const Pattern path = crossing_path_pattern({r, k}, OrderKind::cyclic);
    const auto pos = crossing_path_positions(r, k);
    std::set<std::vector<int>> tuples;
    for_each_embedding(h, path, [&](const Embedding& emb) {
        std::vector<int> tuple(r);
        for (int i = 0; i < r; ++i) tuple[i] = emb.map[pos[k - 1 + i]];
        tuples.insert(std::move(tuple));
        return true;
    });
    return static_cast<std::int64_t>(tuples.size());
}

bool p2_injectivity_check(const Hypergraph& h) {
    if (h.order() != OrderKind::cyclic) throw Error(ErrorCode::NotCyclic, "needs a cyclic host");
    if (h.r() < 2) throw Error(ErrorCode::ArityTooSmall, "needs r >= 2");
    if (!is_free(h, crossing_path_pattern({h.r(), 2}, OrderKind::cyclic)))
        throw Error(ErrorCode::PreconditionViolated, "host contains a crossing 2-path");
    std::set<std::vector<int>> labels;
    for (const auto& e : h.edges()) {
        labels.insert(std::vector<int>(e.begin() + 1, e.end()));
        labels.insert(std::vector<int>(e.begin(), e.end() - 1));
    }
    return labels.size() == 2 * h.size();
}

namespace {

// std::log on long double is accurate to a few ulps; the band below is far
// wider than that and far narrower than the distance of any ratio used here
// from an integer.
constexpr long double kGuard = 1e-12L;

void require_rk(int r, int k) {
    if (r < 2 || k < 2 || k > r) throw Error(ErrorCode::ParamOutOfRange, "needs r >= 2 and 2 <= k <= r");
}

}  // namespace

int t_param(int r, int k) {
    require_rk(r, k);
    const long double ratio = static_cast<long double>((r - 1) * (k - 1)) / std::log(2.0L * r);
    const long double lo = ratio * (1 - kGuard);
    const long double hi = ratio * (1 + kGuard);
    if (std::ceil(lo) != std::ceil(hi))
        throw std::logic_error("t(r,k) is too close to an integer to decide");
    return static_cast<int>(std::ceil(hi));
}

std::int64_t GapThreshold::ceil() const { return static_cast<std::int64_t>(std::ceil(hi)); }

GapThreshold gap_threshold(int n, int r, int k) {
    require_rk(r, k);
    if (n < 1) throw Error(ErrorCode::ParamOutOfRange, "needs n >= 1");
    const long double value =
        static_cast<long double>(n - 1) * std::log(2.0L * r) / static_cast<long double>((r - 1) * (k - 1));
    return GapThreshold{value * (1 - kGuard), value * (1 + kGuard)};
}

}  // namespace oghx
