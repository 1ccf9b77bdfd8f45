#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casekit/assessment.hpp"
#include "casekit/model.hpp"
#include "json.hpp"

namespace casekit {

using Rational = boost::multiprecision::cpp_rational;

/// "5/2", or "2" for integers.
std::string to_string(const Rational& r);
/// Accepts "3", "3/4", "0.75". Throws std::invalid_argument.
Rational parse_rational(std::string_view s);
double to_double(const Rational& r);

enum class Strategy { conservative_min, weighted_mean };

std::string_view to_string(Strategy s);
/// Throws Error(UNKNOWN_STRATEGY).
Strategy parse_strategy(std::string_view s);

/// Where a node's effective value came from, per dimension.
enum class Source { none, direct, children, mixed, override_value };

std::string_view to_string(Source s);

/// Relative contribution of a node's children (and optionally of the node's
/// own direct score, keyed by the node's own id). Contributors left out of the
/// map weigh 0. Weights are renormalized over the contributors that actually
/// have a value, so N/A children drop out.
struct Weighting {
    std::map<std::string, Rational> weights;
    std::string rationale;  // required when weights are not uniform
};

struct Override {
    std::string claim_id;
    Dimension dimension = Dimension::procedural;
    Rational value;
    std::string rationale;
    std::string author;
    Date date;
};

struct RollupOptions {
    Strategy strategy = Strategy::conservative_min;
    int threshold = 2;
    std::map<std::string, Weighting> weights;  // keyed by parent claim id
    std::vector<Override> overrides;
};

struct DimensionRollup {
    std::optional<Rational> effective;
    Source source = Source::none;
    std::vector<std::string> contributing_children;
    std::optional<std::size_t> override_ref;  // index into RollupOptions::overrides

    friend bool operator==(const DimensionRollup&, const DimensionRollup&) = default;
};

struct RollupNode {
    std::string claim_id;
    DimensionRollup procedural;
    DimensionRollup implementation;

    const DimensionRollup& dim(Dimension d) const { return d == Dimension::procedural ? procedural : implementation; }
    DimensionRollup& dim(Dimension d) { return d == Dimension::procedural ? procedural : implementation; }

    friend bool operator==(const RollupNode&, const RollupNode&) = default;
};

struct LowScore {
    std::string claim_id;
    Dimension dimension;
    int score;

    friend bool operator==(const LowScore&, const LowScore&) = default;
};

struct RollupResult {
    std::int64_t case_version = 0;
    Strategy strategy = Strategy::conservative_min;
    int threshold = 2;
    std::map<std::string, RollupNode> nodes;
    /// Every direct (non-stale) dimension score below threshold, by claim id
    /// then dimension. Never influenced by weights or overrides.
    std::vector<LowScore> low_score_register;
    std::vector<std::string> warnings;

    friend bool operator==(const RollupResult&, const RollupResult&) = default;
};

/// Bottom-up combination of direct assessments through the claim tree, one
/// dimension at a time. A node's value combines its present child values and
/// its own direct score (min or weighted mean). Stale and N/A inputs
/// contribute nothing. Overrides replace a node's value as its parent sees it.
/// Errors (Error): UNKNOWN_STRATEGY, INVALID_THRESHOLD, WEIGHT_NOT_A_CHILD,
/// NEGATIVE_WEIGHT, WEIGHT_RATIONALE_MISSING, OVERRIDE_RATIONALE_MISSING,
/// OVERRIDE_BY_POC, OVERRIDE_OUT_OF_RANGE, OVERRIDE_UNKNOWN_CLAIM,
/// DUPLICATE_OVERRIDE.
RollupResult rollup(const SafetyCase& sc, const AssessmentSet& assessments, const RollupOptions& options = {});

struct Spoke {
    std::string family;
    std::optional<Rational> procedural;
    std::optional<Rational> implementation;

    const std::optional<Rational>& value(Dimension d) const {
        return d == Dimension::procedural ? procedural : implementation;
    }
    friend bool operator==(const Spoke&, const Spoke&) = default;
};

/// Spokes in tree (pre-order) order of each family's first claim.
struct RadarData {
    std::vector<Spoke> spokes;

    friend bool operator==(const RadarData&, const RadarData&) = default;
};

/// One spoke per family tag: the strategy's combine (min, or unweighted mean)
/// over the family's claims' present effective values. Throws
/// Error(NO_FAMILIES) when no claim is tagged.
RadarData spoke_values(const SafetyCase& sc, const RollupResult& result);

nlohmann::json to_json(const RollupResult& r);
nlohmann::json to_json(const RadarData& r);

/// Reads `{"<parent>": {"weights": {"<child>": "3/4", ...}, "rationale": ".."}}`.
std::map<std::string, Weighting> weights_from_json(const nlohmann::json& j);
/// Reads `[{"claim_id", "dimension", "value", "rationale", "author", "date"}]`.
std::vector<Override> overrides_from_json(const nlohmann::json& j);

}  // namespace casekit
