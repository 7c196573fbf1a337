#include "trendnet/date.hpp"

#include <charconv>
#include <cstdio>

namespace trendnet {

using namespace std::chrono;

Date::Date(int y, unsigned m, unsigned d)
    : days_(year_month_day{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}}) {}

std::optional<Date> Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    auto digits = [&](std::size_t pos, std::size_t len, int& out) {
        const char* b = text.data() + pos;
        const char* e = b + len;
        for (const char* p = b; p != e; ++p) {
            if (*p < '0' || *p > '9') return false;
        }
        return std::from_chars(b, e, out).ec == std::errc{};
    };
    int y = 0, m = 0, d = 0;
    if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) {
        return std::nullopt;
    }
    const year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                             std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        return std::nullopt;
    }
    return Date{std::chrono::sys_days{ymd}};
}

std::string Date::to_string() const {
    const auto v = ymd();
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(v.year()),
                  static_cast<unsigned>(v.month()), static_cast<unsigned>(v.day()));
    return buf;
}

Date first_of_month_on_or_after(Date d) {
    const auto v = d.ymd();
    if (v.day() == day{1}) {
        return d;
    }
    const year_month next = year_month{v.year(), v.month()} + months{1};
    return Date{std::chrono::sys_days{next / 1}};
}

Date add_months(Date first_of_month, int n) {
    const auto v = first_of_month.ymd();
    const year_month next = year_month{v.year(), v.month()} + months{n};
    return Date{std::chrono::sys_days{next / 1}};
}

DateRange default_analysis_span() {
    return {Date{2020, 3, 16}, Date{2021, 3, 15}};
}

}  // namespace trendnet
