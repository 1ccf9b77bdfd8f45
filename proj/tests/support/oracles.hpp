#pragma once

// Independent re-implementations used to cross-check the library. They share
// no code with src/ beyond the plain data types.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "casekit/aggregation.hpp"
#include "casekit/model.hpp"

namespace oracle {

// ------------------------------------------------------------ evidence status

/// Inputs in the terms the rubric rows use, rather than record fields.
struct EvidenceFacts {
    bool exists;
    bool has_review_date;
    int months_since;  // whole months since last review (or since creation when never reviewed)
    bool active_check;
    bool needs_major_revision;
    bool has_owner;
    bool owner_still_affiliated;
    bool revision_history;
    bool approvals;
    bool controlled;
};

/// Each row of the status table read as a predicate; the lowest disqualifying
/// row wins, then the strongest satisfied row.
inline int evidence_status(const EvidenceFacts& f) {
    const bool row0 = !f.exists;
    if (row0) return 0;

    const bool timestamped = f.has_review_date && f.active_check;
    const bool older_than_a_year_without_timestamp = f.months_since >= 12 && !timestamped;
    const bool orphaned = !f.has_owner || !f.owner_still_affiliated;
    const bool row1 = f.needs_major_revision || older_than_a_year_without_timestamp || orphaned;
    if (row1) return 1;

    const bool row3 = f.months_since <= 5 && f.revision_history && f.approvals && f.controlled;
    if (row3) return 3;

    const bool row2 = f.months_since <= 11 && (timestamped || f.has_review_date);
    if (row2) return 2;
    return 1;
}

// ------------------------------------------------------------ roll-up

/// Exact fraction over int64; small trees keep numerators tiny.
struct Frac {
    std::int64_t n = 0, d = 1;

    Frac() = default;
    Frac(std::int64_t num, std::int64_t den = 1) : n(num), d(den) { norm(); }
    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        auto g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
    friend Frac operator/(Frac a, Frac b) { return Frac(a.n * b.d, a.d * b.n); }
    friend bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
    friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
    std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

struct Scores {
    std::optional<int> p, i;
};

struct Options {
    bool min = true;
    std::map<std::string, std::map<std::string, Frac>> weights;  // parent -> contributor -> weight
    std::map<std::pair<std::string, int>, Frac> overrides;      // (claim, dim) -> value
};

/// Recursive evaluation straight from the definition: a node's value is the
/// combine of its children's values and its own score, unless overridden.
inline std::optional<Frac> value(const casekit::SafetyCase& sc, const std::map<std::string, Scores>& direct,
                                 const Options& o, const std::string& id, int dim) {
    if (auto it = o.overrides.find({id, dim}); it != o.overrides.end()) return it->second;

    std::vector<std::pair<std::string, Frac>> in;
    for (const auto& child : sc.claims.at(id).children) {
        if (auto v = value(sc, direct, o, child, dim)) in.emplace_back(child, *v);
    }
    if (auto it = direct.find(id); it != direct.end()) {
        auto s = dim == 0 ? it->second.p : it->second.i;
        if (s) in.emplace_back(id, Frac(*s));
    }
    if (in.empty()) return std::nullopt;

    if (o.min) {
        Frac m = in[0].second;
        for (auto& [k, v] : in) {
            if (v < m) m = v;
        }
        return m;
    }
    auto w = o.weights.find(id);
    if (w != o.weights.end()) {
        Frac total, acc;
        for (auto& [k, v] : in) {
            auto wk = w->second.find(k);
            Frac weight = wk == w->second.end() ? Frac(0) : wk->second;
            total = total + weight;
            acc = acc + weight * v;
        }
        if (total.n != 0) return acc / total;
    }
    Frac acc;
    for (auto& [k, v] : in) acc = acc + v;
    return acc / Frac(static_cast<std::int64_t>(in.size()));
}

inline std::string to_string(const std::optional<Frac>& f) { return f ? f->str() : "-"; }
inline std::string to_string(const std::optional<casekit::Rational>& r) { return r ? casekit::to_string(*r) : "-"; }

}  // namespace oracle
