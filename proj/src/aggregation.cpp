#include "casekit/aggregation.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "casekit/errors.hpp"

namespace casekit {

using nlohmann::json;
using boost::multiprecision::cpp_int;

std::string to_string(const Rational& r) {
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(s) + "'"); };
    auto digits = [](std::string_view d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (s.empty()) throw bad();
    bool negative = s.front() == '-';
    std::string_view body = negative ? s.substr(1) : s;
    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto n = body.substr(0, slash), d = body.substr(slash + 1);
        if (!digits(n) || !digits(d)) throw bad();
        cpp_int den{std::string(d)};
        if (den == 0) throw bad();
        out = Rational(cpp_int(std::string(n)), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (!(digits(ip) || ip.empty()) || !digits(fp)) throw bad();
        cpp_int scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        cpp_int whole = ip.empty() ? cpp_int(0) : cpp_int(std::string(ip));
        out = Rational(whole * scale + cpp_int(std::string(fp)), scale);
    } else {
        if (!digits(body)) throw bad();
        out = Rational(cpp_int(std::string(body)));
    }
    return negative ? Rational(-out) : out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string_view to_string(Strategy s) {
    return s == Strategy::conservative_min ? "conservative_min" : "weighted_mean";
}

Strategy parse_strategy(std::string_view s) {
    if (s == "conservative_min") return Strategy::conservative_min;
    if (s == "weighted_mean") return Strategy::weighted_mean;
    throw Error("UNKNOWN_STRATEGY", std::string(s), "unknown strategy '" + std::string(s) + "'");
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::none: return "none";
        case Source::direct: return "direct";
        case Source::children: return "children";
        case Source::mixed: return "mixed";
        case Source::override_value: return "override";
    }
    return "none";
}

namespace {

void check_options(const SafetyCase& sc, const RollupOptions& options) {
    if (options.threshold < 0 || options.threshold > 3) {
        throw Error("INVALID_THRESHOLD", std::to_string(options.threshold), "threshold must be within 0..3");
    }
    for (const auto& [parent, w] : options.weights) {
        const Claim* c = sc.find_claim(parent);
        if (!c) throw Error("WEIGHT_NOT_A_CHILD", parent, "weights given for unknown claim '" + parent + "'");
        std::optional<Rational> first;
        bool uniform = true;
        for (const auto& [child, value] : w.weights) {
            const bool is_child = std::find(c->children.begin(), c->children.end(), child) != c->children.end();
            if (!is_child && child != parent) {
                throw Error("WEIGHT_NOT_A_CHILD", parent + "/" + child,
                            "'" + child + "' is not a child of '" + parent + "'");
            }
            if (value < 0) throw Error("NEGATIVE_WEIGHT", parent + "/" + child, "weights must be non-negative");
            if (!first) first = value;
            uniform = uniform && value == *first;
        }
        // Leaving a child out gives it weight 0, which is non-uniform too.
        if (w.weights.size() < c->children.size()) uniform = false;
        if (!uniform && w.rationale.find_first_not_of(" \t\r\n") == std::string::npos) {
            throw Error("WEIGHT_RATIONALE_MISSING", parent, "non-uniform weights for '" + parent + "' need a rationale");
        }
    }
    std::set<std::pair<std::string, Dimension>> seen;
    for (const auto& o : options.overrides) {
        const Claim* c = sc.find_claim(o.claim_id);
        if (!c) throw Error("OVERRIDE_UNKNOWN_CLAIM", o.claim_id, "override targets unknown claim '" + o.claim_id + "'");
        if (o.rationale.find_first_not_of(" \t\r\n") == std::string::npos) {
            throw Error("OVERRIDE_RATIONALE_MISSING", o.claim_id, "override on '" + o.claim_id + "' has no rationale");
        }
        if (o.value < 0 || o.value > 3) {
            throw Error("OVERRIDE_OUT_OF_RANGE", o.claim_id, "override value must be within 0..3");
        }
        if (c->poc && c->poc->name == o.author) {
            throw Error("OVERRIDE_BY_POC", o.claim_id, "override author is the claim's point of contact");
        }
        if (!seen.insert({o.claim_id, o.dimension}).second) {
            throw Error("DUPLICATE_OVERRIDE", o.claim_id,
                        "more than one override for '" + o.claim_id + "' " + std::string(to_string(o.dimension)));
        }
    }
}

Rational combine(Strategy strategy, const std::vector<std::pair<std::string, Rational>>& inputs,
                 const Weighting* weighting, std::vector<std::string>& warnings, const std::string& node) {
    if (strategy == Strategy::conservative_min) {
        Rational m = inputs.front().second;
        for (const auto& [_, v] : inputs) m = std::min(m, v);
        return m;
    }
    Rational total_weight = 0, acc = 0;
    if (weighting) {
        for (const auto& [id, v] : inputs) {
            auto it = weighting->weights.find(id);
            if (it == weighting->weights.end()) continue;
            total_weight += it->second;
            acc += it->second * v;
        }
        if (total_weight > 0) return acc / total_weight;
        warnings.push_back(node + ": every contributing value has weight 0; using uniform weights");
        acc = 0;
    }
    for (const auto& [_, v] : inputs) acc += v;
    return acc / Rational(static_cast<long long>(inputs.size()));
}

}  // namespace

RollupResult rollup(const SafetyCase& sc, const AssessmentSet& assessments, const RollupOptions& options) {
    check_options(sc, options);
    RollupResult result;
    result.case_version = sc.version;
    result.strategy = options.strategy;
    result.threshold = options.threshold;

    // Usable direct assessments.
    AssessmentSet direct;
    for (const auto& [id, a] : assessments) {
        if (!sc.find_claim(id)) {
            result.warnings.push_back(id + ": assessment for a claim not in this case version ignored");
            continue;
        }
        if (a.stale) {
            result.warnings.push_back(id + ": stale assessment excluded pending re-assessment");
            continue;
        }
        direct.emplace(id, a);
        for (auto d : {Dimension::procedural, Dimension::implementation}) {
            if (auto s = a.score(d); s && *s < options.threshold) result.low_score_register.push_back({id, d, *s});
        }
    }

    for (const auto& id : traverse(sc, TraversalOrder::post)) {
        const Claim& claim = sc.claims.at(id);
        RollupNode node{id, {}, {}};
        const ClaimAssessment* own = nullptr;
        if (auto it = direct.find(id); it != direct.end()) own = &it->second;
        const Weighting* weighting = nullptr;
        if (auto it = options.weights.find(id); it != options.weights.end()) weighting = &it->second;

        for (auto d : {Dimension::procedural, Dimension::implementation}) {
            auto& out = node.dim(d);
            std::vector<std::pair<std::string, Rational>> inputs;
            for (const auto& child : claim.children) {
                const auto& cv = result.nodes.at(child).dim(d).effective;
                if (cv) {
                    inputs.emplace_back(child, *cv);
                    out.contributing_children.push_back(child);
                }
            }
            const bool has_direct = own && own->score(d).has_value();
            if (has_direct) inputs.emplace_back(id, Rational(*own->score(d)));

            if (!inputs.empty()) {
                out.effective = combine(options.strategy, inputs, weighting, result.warnings, id);
                out.source = has_direct ? (out.contributing_children.empty() ? Source::direct : Source::mixed)
                                        : Source::children;
            } else if (!claim.children.empty() || (own && own->na(d))) {
                result.warnings.push_back(id + ": no contributing value for " + std::string(to_string(d)) +
                                          " (all inputs N/A or unassessed)");
            }

            for (std::size_t k = 0; k < options.overrides.size(); ++k) {
                const auto& o = options.overrides[k];
                if (o.claim_id == id && o.dimension == d) {
                    out.effective = o.value;
                    out.source = Source::override_value;
                    out.override_ref = k;
                }
            }
        }
        result.nodes.emplace(id, std::move(node));
    }

    std::sort(result.low_score_register.begin(), result.low_score_register.end(),
              [](const LowScore& a, const LowScore& b) {
                  return std::tie(a.claim_id, a.dimension) < std::tie(b.claim_id, b.dimension);
              });
    return result;
}

RadarData spoke_values(const SafetyCase& sc, const RollupResult& result) {
    std::vector<std::string> families;
    std::map<std::string, std::vector<std::string>> members;
    for (const auto& id : traverse(sc, TraversalOrder::pre)) {
        const auto& fam = sc.claims.at(id).family;
        if (!fam) continue;
        if (!members.count(*fam)) families.push_back(*fam);
        members[*fam].push_back(id);
    }
    if (families.empty()) throw Error("NO_FAMILIES", "claims", "no claim carries a family tag");

    RadarData radar;
    for (const auto& fam : families) {
        Spoke spoke{fam, std::nullopt, std::nullopt};
        for (auto d : {Dimension::procedural, Dimension::implementation}) {
            std::vector<Rational> values;
            for (const auto& id : members[fam]) {
                auto it = result.nodes.find(id);
                if (it != result.nodes.end() && it->second.dim(d).effective) values.push_back(*it->second.dim(d).effective);
            }
            if (values.empty()) continue;
            Rational v;
            if (result.strategy == Strategy::conservative_min) {
                v = *std::min_element(values.begin(), values.end());
            } else {
                for (const auto& x : values) v += x;
                v /= Rational(static_cast<long long>(values.size()));
            }
            (d == Dimension::procedural ? spoke.procedural : spoke.implementation) = v;
        }
        radar.spokes.push_back(std::move(spoke));
    }
    return radar;
}

namespace {

json rational_json(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

json dimension_json(const DimensionRollup& d) {
    return {
        {"effective", rational_json(d.effective)},
        {"value", d.effective ? json(to_double(*d.effective)) : json(nullptr)},
        {"source", std::string(to_string(d.source))},
        {"contributing_children", d.contributing_children},
        {"override_ref", d.override_ref ? json(*d.override_ref) : json(nullptr)},
    };
}

}  // namespace

json to_json(const RollupResult& r) {
    json nodes = json::object();
    for (const auto& [id, n] : r.nodes) {
        nodes[id] = {{"procedural", dimension_json(n.procedural)}, {"implementation", dimension_json(n.implementation)}};
    }
    json reg = json::array();
    for (const auto& l : r.low_score_register) {
        reg.push_back({{"claim_id", l.claim_id}, {"dimension", std::string(to_string(l.dimension))}, {"score", l.score}});
    }
    return {
        {"case_version", r.case_version},
        {"strategy", std::string(to_string(r.strategy))},
        {"threshold", r.threshold},
        {"nodes", nodes},
        {"low_score_register", reg},
        {"warnings", r.warnings},
    };
}

json to_json(const RadarData& r) {
    json spokes = json::array();
    for (const auto& s : r.spokes) {
        spokes.push_back({{"family", s.family},
                          {"procedural", rational_json(s.procedural)},
                          {"implementation", rational_json(s.implementation)}});
    }
    return {{"spokes", spokes}, {"scale", {{"min", 0}, {"max", 3}}}};
}

namespace {

Rational rational_from(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw Error("SCHEMA_ERROR", where, where + ": " + e.what());
    }
    throw Error("SCHEMA_ERROR", where, where + ": expected an integer or a rational string such as \"3/4\"");
}

}  // namespace

std::map<std::string, Weighting> weights_from_json(const json& j) {
    std::map<std::string, Weighting> out;
    if (!j.is_object()) throw Error("SCHEMA_ERROR", "weights", "weights: expected an object keyed by parent id");
    for (auto it = j.begin(); it != j.end(); ++it) {
        Weighting w;
        const auto& body = it.value();
        if (!body.is_object() || !body.contains("weights") || !body["weights"].is_object()) {
            throw Error("SCHEMA_ERROR", it.key(), it.key() + ": expected {\"weights\": {...}, \"rationale\": \"...\"}");
        }
        for (auto wt = body["weights"].begin(); wt != body["weights"].end(); ++wt) {
            w.weights[wt.key()] = rational_from(wt.value(), it.key() + ".weights." + wt.key());
        }
        w.rationale = body.value("rationale", "");
        out.emplace(it.key(), std::move(w));
    }
    return out;
}

std::vector<Override> overrides_from_json(const json& j) {
    std::vector<Override> out;
    if (!j.is_array()) throw Error("SCHEMA_ERROR", "overrides", "overrides: expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "overrides[" + std::to_string(i) + "]";
        const auto& o = j[i];
        try {
            auto dim = dimension_from(o.at("dimension").get<std::string>());
            if (!dim) throw Error("SCHEMA_ERROR", where + ".dimension", where + ".dimension: unknown dimension");
            out.push_back({o.at("claim_id").get<std::string>(), *dim, rational_from(o.at("value"), where + ".value"),
                           o.value("rationale", ""), o.value("author", ""),
                           Date::parse(o.at("date").get<std::string>())});
        } catch (const json::exception& e) {
            throw Error("SCHEMA_ERROR", where, where + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw Error("SCHEMA_ERROR", where, where + ": " + e.what());
        }
    }
    return out;
}

}  // namespace casekit
