#include "casekit/date.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace casekit {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

// Howard Hinnant's days_from_civil / civil_from_days.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::invalid_argument("not a number: " + std::string(s));
    }
    return v;
}

}  // namespace

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return kDays[month - 1];
}

Date::Date(int year, int month, int day) : year_(year), month_(month), day_(day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) {
        throw std::invalid_argument("invalid calendar date");
    }
}

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') {
        throw std::invalid_argument("expected YYYY-MM-DD, got '" + std::string(iso) + "'");
    }
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (iso[i] < '0' || iso[i] > '9') {
            throw std::invalid_argument("expected YYYY-MM-DD, got '" + std::string(iso) + "'");
        }
    }
    try {
        return Date(parse_int(iso.substr(0, 4)), parse_int(iso.substr(5, 2)), parse_int(iso.substr(8, 2)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid calendar date '" + std::string(iso) + "'");
    }
}

Date Date::today() {
    using namespace std::chrono;
    const auto now = floor<days>(system_clock::now());
    return from_days(now.time_since_epoch().count());
}

std::int64_t Date::days_since_epoch() const { return days_from_civil(year_, month_, day_); }

Date Date::from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Date(static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d));
}

Date Date::add_months(int months) const {
    int total = year_ * 12 + (month_ - 1) + months;
    int y = total / 12;
    int m = total % 12;
    if (m < 0) {
        m += 12;
        --y;
    }
    ++m;
    return Date(y, m, std::min(day_, days_in_month(y, m)));
}

std::string Date::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year_, month_, day_);
    return buf;
}

int whole_months_between(const Date& from, const Date& to) {
    if (to < from) return -whole_months_between(to, from);
    int months = (to.year() - from.year()) * 12 + (to.month() - from.month());
    // A clamped end-of-month date completes the month (Jan 31 -> Feb 29 is 1).
    const bool month_end = to.day() == days_in_month(to.year(), to.month());
    if (to.day() < from.day() && !month_end) --months;
    return months;
}

}  // namespace casekit
