#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace trendnet {

/// Calendar date without time zone, stored as days since 1970-01-01.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days d) : days_(d) {}
    Date(int year, unsigned month, unsigned day);

    /// Parses a strict `YYYY-MM-DD` string. Returns nullopt for anything else,
    /// including impossible calendar dates such as 2021-02-29.
    static std::optional<Date> parse(std::string_view text);

    std::string to_string() const;

    constexpr std::chrono::sys_days sys_days() const { return days_; }
    std::chrono::year_month_day ymd() const { return std::chrono::year_month_day{days_}; }
    int year() const { return static_cast<int>(ymd().year()); }
    unsigned month() const { return static_cast<unsigned>(ymd().month()); }
    unsigned day() const { return static_cast<unsigned>(ymd().day()); }

    constexpr Date operator+(std::int64_t n) const { return Date{days_ + std::chrono::days{n}}; }
    constexpr Date operator-(std::int64_t n) const { return Date{days_ - std::chrono::days{n}}; }
    constexpr std::int64_t operator-(Date other) const { return (days_ - other.days_).count(); }
    constexpr Date& operator+=(std::int64_t n) {
        days_ += std::chrono::days{n};
        return *this;
    }

    constexpr auto operator<=>(const Date&) const = default;

private:
    std::chrono::sys_days days_{};
};

/// Closed interval of calendar dates, `first` and `last` inclusive.
struct DateRange {
    Date first;
    Date last;

    std::int64_t days() const { return last - first + 1; }
    bool contains(Date d) const { return first <= d && d <= last; }
    bool empty() const { return last < first; }

    bool operator==(const DateRange&) const = default;
};

/// First day of the month following `d`, or `d` itself when it is already a first.
Date first_of_month_on_or_after(Date d);

/// Adds whole calendar months to a first-of-month date.
Date add_months(Date first_of_month, int months);

/// The default analysis span, 2020-03-16 through 2021-03-15.
DateRange default_analysis_span();

}  // namespace trendnet
