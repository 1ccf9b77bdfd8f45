#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace casekit {

/// Proleptic Gregorian calendar date. Serialized as ISO-8601 `YYYY-MM-DD`.
class Date {
public:
    constexpr Date() = default;

    /// Throws std::invalid_argument on an impossible date.
    Date(int year, int month, int day);

    static Date parse(std::string_view iso);
    static Date today();

    int year() const { return year_; }
    int month() const { return month_; }
    int day() const { return day_; }

    std::int64_t days_since_epoch() const;
    static Date from_days(std::int64_t days);

    Date add_months(int months) const;
    Date add_days(int days) const { return from_days(days_since_epoch() + days); }

    std::string str() const;

    friend constexpr auto operator<=>(const Date&, const Date&) = default;

private:
    int year_ = 1970;
    int month_ = 1;
    int day_ = 1;
};

/// Whole calendar months elapsed from `from` to `to`. A month counts once the
/// day-of-month is reached, or `to` is the last day of a shorter month
/// (2024-01-31 -> 2024-02-29 is 1 month, 2024-01-31 -> 2024-02-28 is 0).
/// Negative when `to` precedes `from`.
int whole_months_between(const Date& from, const Date& to);

int days_in_month(int year, int month);

}  // namespace casekit
