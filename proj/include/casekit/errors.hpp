#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace casekit {

/// Base error carrying a stable machine code (e.g. "UNKNOWN_CLAIM") and the
/// location it refers to (claim id, field path, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string location, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& location() const noexcept { return location_; }

private:
    std::string code_;
    std::string location_;
};

}  // namespace casekit
