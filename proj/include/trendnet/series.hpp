#pragma once

#include <string>
#include <vector>

#include "trendnet/date.hpp"

namespace trendnet {

struct DatedValue {
    Date date;
    double value = 0.0;

    bool operator==(const DatedValue&) const = default;
};

/// One exported daily request: consecutive dates, values on the export's own 0-100 scale.
struct DailySegment {
    std::string keyword;
    std::vector<DatedValue> points;

    Date start_date() const { return points.front().date; }
    Date end_date() const { return points.back().date; }

    /// True when the segment looks like an untouched export: its maximum is
    /// 100, or every value is 0.
    bool is_export_normalized() const;
};

/// Weekly export. `points[i].date` is the first day of week i.
struct WeeklySeries {
    std::string keyword;
    std::vector<DatedValue> points;

    bool operator==(const WeeklySeries&) const = default;
};

enum class Scale { Raw, Rescaled };

struct DailySeries {
    std::string keyword;
    std::vector<DatedValue> points;
    Scale scale = Scale::Raw;

    std::size_t size() const { return points.size(); }
    DateRange span() const { return {points.front().date, points.back().date}; }

    bool operator==(const DailySeries&) const = default;
};

}  // namespace trendnet
