#include "casekit/service.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "casekit/case_io.hpp"
#include "casekit/evidence_scoring.hpp"
#include "casekit/linting.hpp"
#include "casekit/radar.hpp"
#include "httplib.h"

namespace casekit {

using nlohmann::json;

std::string_view to_string(QueueReason r) {
    switch (r) {
        case QueueReason::stale: return "stale";
        case QueueReason::unassessed: return "unassessed";
        case QueueReason::below_threshold: return "below_threshold";
    }
    return "unassessed";
}

namespace {

Response json_response(int status, const json& body) { return {status, "application/json", canonical_dump(body), {}}; }

Response error_response(int status, const std::string& code, const std::string& field, const std::string& message) {
    return json_response(status, {{"error", code}, {"field", field}, {"message", message}});
}

std::optional<int> parse_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

Workbench::Workbench(SafetyCase sc, WorkbenchConfig config, AssessmentLog log, TriggerLog triggers)
    : case_(std::make_shared<const SafetyCase>(std::move(sc))),
      config_(std::move(config)),
      log_(std::move(log)),
      triggers_(std::move(triggers)) {}

std::unique_ptr<Workbench> Workbench::open(const std::filesystem::path& case_path, WorkbenchConfig config) {
    std::ifstream in(case_path, std::ios::binary);
    if (!in) throw Error("IO_ERROR", case_path.string(), "cannot read '" + case_path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    SafetyCase sc = parse_case(ss.str());
    AssessmentLog log = config.assessment_log_path ? AssessmentLog::load(*config.assessment_log_path) : AssessmentLog{};
    TriggerLog triggers = config.trigger_log_path ? TriggerLog::load(*config.trigger_log_path) : TriggerLog{};
    return std::make_unique<Workbench>(std::move(sc), std::move(config), std::move(log), std::move(triggers));
}

std::int64_t Workbench::log_version() const {
    std::shared_lock lock(mutex_);
    return log_.head();
}

AssessmentSet Workbench::assessments() const {
    std::shared_lock lock(mutex_);
    return log_.current();
}

std::vector<TriggerEvent> Workbench::triggers() const {
    std::shared_lock lock(mutex_);
    return triggers_.events();
}

std::vector<QueueItem> Workbench::findings_queue() const { return queue_of(assessments()); }

std::vector<QueueItem> Workbench::queue_of(const AssessmentSet& current) const {
    std::vector<QueueItem> groups[3];
    for (const auto& id : traverse(*case_, TraversalOrder::pre)) {
        auto it = current.find(id);
        if (it == current.end()) {
            groups[1].push_back({id, QueueReason::unassessed});
        } else if (it->second.stale) {
            groups[0].push_back({id, QueueReason::stale});
        } else {
            for (auto d : {Dimension::procedural, Dimension::implementation}) {
                auto s = it->second.score(d);
                if (s && *s < config_.rollup.threshold) {
                    groups[2].push_back({id, QueueReason::below_threshold});
                    break;
                }
            }
        }
    }
    std::vector<QueueItem> out;
    for (auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

void Workbench::stamp_locked(Response& r) const {
    r.headers["X-Case-Version"] = std::to_string(case_->version);
    r.headers["X-Log-Version"] = std::to_string(log_.head());
}

RollupResult Workbench::rollup_locked(const RollupOptions& options) const {
    return rollup(*case_, log_.current(), options);
}

AssessmentReport Workbench::report_locked() const {
    const SafetyCase& sc = *case_;
    const AssessmentSet current = log_.current();
    return build_report(sc, rollup(sc, current, config_.rollup), score_library(sc, config_.as_of),
                        lint_report(sc, &current), pending_reassessment(sc, current), config_.actions);
}

Response Workbench::get_case() const {
    Response r{200, "application/json", serialize_case(*case_), {}};
    std::shared_lock lock(mutex_);
    stamp_locked(r);
    return r;
}

Response Workbench::get_rollup(const std::string& strategy, const std::string& threshold) const {
    RollupOptions options = config_.rollup;
    try {
        if (!strategy.empty()) options.strategy = parse_strategy(strategy);
        if (!threshold.empty()) {
            auto t = parse_int(threshold);
            if (!t) return error_response(400, "INVALID_THRESHOLD", "threshold", "threshold must be an integer");
            options.threshold = *t;
        }
        Response r;
        {
            std::shared_lock lock(mutex_);
            r = json_response(200, to_json(rollup_locked(options)));
            stamp_locked(r);
        }
        return r;
    } catch (const Error& e) {
        return error_response(400, e.code(), e.location(), e.what());
    }
}

Response Workbench::get_report() const {
    try {
        Response r;
        {
            std::shared_lock lock(mutex_);
            r = {200, "text/markdown; charset=utf-8", render_markdown(report_locked()), {}};
            stamp_locked(r);
        }
        return r;
    } catch (const Error& e) {
        return error_response(500, e.code(), e.location(), e.what());
    }
}

Response Workbench::get_radar() const {
    try {
        Response r;
        {
            std::shared_lock lock(mutex_);
            r = {200, "image/svg+xml", render_radar_svg(spoke_values(*case_, rollup_locked(config_.rollup))), {}};
            stamp_locked(r);
        }
        return r;
    } catch (const Error& e) {
        return error_response(422, e.code(), e.location(), e.what());
    }
}

Response Workbench::get_queue() const {
    std::shared_lock lock(mutex_);
    json items = json::array();
    for (const auto& q : queue_of(log_.current())) {
        items.push_back({{"claim_id", q.claim_id}, {"reason", std::string(to_string(q.reason))}});
    }
    Response r = json_response(200, {{"items", items}, {"threshold", config_.rollup.threshold}});
    stamp_locked(r);
    return r;
}

Response Workbench::post_assessment(const std::string& body) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::parse_error& e) {
        return error_response(400, "MALFORMED_BODY", "", e.what());
    }
    if (!doc.is_object() || !doc.contains("record") || !doc["record"].is_object()) {
        return error_response(422, "INVARIANT_VIOLATION", "record", "body must carry a \"record\" object");
    }
    if (!doc.contains("expected_version") || !doc["expected_version"].is_number_integer()) {
        return error_response(422, "INVARIANT_VIOLATION", "expected_version",
                              "body must carry an integer \"expected_version\"");
    }
    const auto expected = doc["expected_version"].get<std::int64_t>();

    ClaimAssessment rec;
    try {
        rec = assessment_from_json(doc["record"]);
    } catch (const Error& e) {
        return error_response(422, e.code(), e.location(), e.what());
    }

    std::unique_lock lock(mutex_);
    if (expected != log_.head()) {
        return json_response(409, {{"error", "CONFLICT"},
                                   {"current_version", log_.head()},
                                   {"message", "assessment log has moved on; reload and resubmit"}});
    }
    AssessmentLog next = log_;
    try {
        const ClaimAssessment& stored = record_assessment(*case_, next, std::move(rec));
        if (config_.assessment_log_path) next.append_to_file(*config_.assessment_log_path, log_.head());
        json out = {{"record", to_json(stored)}, {"version", next.head()}};
        log_ = std::move(next);
        Response r = json_response(201, out);
        stamp_locked(r);
        return r;
    } catch (const AssessmentError& e) {
        return error_response(422, e.code(), e.location(), e.what());
    } catch (const Error& e) {
        return error_response(500, e.code(), e.location(), e.what());
    }
}

Response Workbench::post_trigger(const std::string& body) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::parse_error& e) {
        return error_response(400, "MALFORMED_BODY", "", e.what());
    }
    if (!doc.is_object()) return error_response(422, "SCHEMA_ERROR", "", "trigger must be an object");
    if (!doc.contains("raised_at")) doc["raised_at"] = config_.as_of.str();

    TriggerEvent t;
    try {
        t = trigger_from_json(doc);
    } catch (const Error& e) {
        return error_response(422, e.code(), e.location(), e.what());
    }

    std::unique_lock lock(mutex_);
    try {
        TriggerLog next_triggers = triggers_;
        const TriggerEvent stored = next_triggers.append(std::move(t));
        AssessmentLog next_log = log_;
        StaleResult result = mark_stale(next_log, *case_, *case_, {}, {stored});
        if (config_.trigger_log_path) next_triggers.append_to_file(*config_.trigger_log_path, triggers_.events().size());
        if (config_.assessment_log_path) next_log.append_to_file(*config_.assessment_log_path, log_.head());
        triggers_ = std::move(next_triggers);
        log_ = std::move(next_log);
        Response r = json_response(201, {{"trigger", to_json(stored)}, {"stale", to_json(result)}, {"version", log_.head()}});
        stamp_locked(r);
        return r;
    } catch (const Error& e) {
        const bool io = e.code() == "IO_ERROR";
        return error_response(io ? 500 : 422, e.code(), e.location(), e.what());
    }
}

struct HttpServer::Impl {
    Workbench& wb;
    httplib::Server server;

    explicit Impl(Workbench& w) : wb(w) {
        auto send = [](httplib::Response& res, const Response& r) {
            res.status = r.status;
            for (const auto& [k, v] : r.headers) res.set_header(k, v);
            res.set_content(r.body, r.content_type);
        };
        server.Get("/case", [this, send](const httplib::Request&, httplib::Response& res) { send(res, wb.get_case()); });
        server.Get("/rollup", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, wb.get_rollup(req.get_param_value("strategy"), req.get_param_value("threshold")));
        });
        server.Get("/report", [this, send](const httplib::Request&, httplib::Response& res) { send(res, wb.get_report()); });
        server.Get("/radar.svg", [this, send](const httplib::Request&, httplib::Response& res) { send(res, wb.get_radar()); });
        server.Get("/queue", [this, send](const httplib::Request&, httplib::Response& res) { send(res, wb.get_queue()); });
        server.Post("/assessments", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, wb.post_assessment(req.body));
        });
        server.Post("/triggers", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, wb.post_trigger(req.body));
        });
        server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
            std::string what = "internal error";
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                what = e.what();
            } catch (...) {
            }
            res.status = 500;
            res.set_content(canonical_dump({{"error", "INTERNAL"}, {"field", ""}, {"message", what}}), "application/json");
        });
    }
};

HttpServer::HttpServer(Workbench& wb) : impl_(std::make_unique<Impl>(wb)) {}
HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace casekit
