#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "casekit/aggregation.hpp"
#include "casekit/assessment.hpp"
#include "casekit/lifecycle.hpp"
#include "casekit/model.hpp"
#include "casekit/report.hpp"

namespace casekit {

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    std::map<std::string, std::string> headers;
};

enum class QueueReason { stale, unassessed, below_threshold };

std::string_view to_string(QueueReason r);

struct QueueItem {
    std::string claim_id;
    QueueReason reason;

    friend bool operator==(const QueueItem&, const QueueItem&) = default;
};

struct WorkbenchConfig {
    Date as_of = Date::today();
    RollupOptions rollup;  // defaults for /rollup, /report, /radar.svg and /queue
    std::vector<SuggestedAction> actions;
    std::optional<std::filesystem::path> assessment_log_path;
    std::optional<std::filesystem::path> trigger_log_path;
};

/// Session state behind the HTTP endpoints. The case is an immutable snapshot;
/// the assessment and trigger logs only grow. Readers share a lock, writers
/// are serialized and persist to the log files (when configured) before the
/// in-memory state changes.
class Workbench {
public:
    Workbench(SafetyCase sc, WorkbenchConfig config, AssessmentLog log = {}, TriggerLog triggers = {});

    /// Loads the case (validated) and both logs, creating neither file.
    static std::unique_ptr<Workbench> open(const std::filesystem::path& case_path, WorkbenchConfig config);

    std::shared_ptr<const SafetyCase> snapshot() const { return case_; }
    std::int64_t log_version() const;
    AssessmentSet assessments() const;
    std::vector<TriggerEvent> triggers() const;

    /// Stale, then unassessed, then below-threshold claims; tree order within
    /// each group.
    std::vector<QueueItem> findings_queue() const;

    Response get_case() const;
    /// Empty strings select the configured defaults.
    Response get_rollup(const std::string& strategy = "", const std::string& threshold = "") const;
    Response get_report() const;
    Response get_radar() const;
    Response get_queue() const;
    /// Body: {"record": <assessment>, "expected_version": <log version>}.
    Response post_assessment(const std::string& body);
    /// Body: a trigger event; "id" and "raised_at" may be omitted.
    Response post_trigger(const std::string& body);

private:
    RollupResult rollup_locked(const RollupOptions& options) const;
    AssessmentReport report_locked() const;
    std::vector<QueueItem> queue_of(const AssessmentSet& current) const;
    void stamp_locked(Response& r) const;

    std::shared_ptr<const SafetyCase> case_;
    WorkbenchConfig config_;
    mutable std::shared_mutex mutex_;
    AssessmentLog log_;
    TriggerLog triggers_;
};

/// HTTP front end for a Workbench. No authentication; bind to loopback unless
/// something in front of it handles access control.
class HttpServer {
public:
    explicit HttpServer(Workbench& wb);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Returns the bound port (an ephemeral one when `port` is 0), or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace casekit
