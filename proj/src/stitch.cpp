#include "trendnet/stitch.hpp"

#include <algorithm>
#include <string>

#include "trendnet/error.hpp"

namespace trendnet {

namespace {

// Index of the week containing `d`. Weeks are sorted and 7 days apart, so
// the lookup is arithmetic; the bounds check turns gaps into errors.
std::size_t week_index(const std::vector<WeekMetrics>& weeks, Date d, const std::string& keyword) {
    if (weeks.empty() || d < weeks.front().week_start || d >= weeks.back().week_end()) {
        throw Error(Errc::UncoveredDate, "keyword '" + keyword + "': daily date " + d.to_string() +
                                             " is not covered by any weekly row");
    }
    const auto idx = static_cast<std::size_t>((d - weeks.front().week_start) / 7);
    if (d < weeks[idx].week_start || d >= weeks[idx].week_end()) {
        throw Error(Errc::UncoveredDate, "keyword '" + keyword + "': weekly rows are not 7 days apart near " +
                                             d.to_string());
    }
    return idx;
}

}  // namespace

std::vector<WeekMetrics> calculate_weekly_metrics(const WeeklySeries& weekly, const DailySeries& daily) {
    if (daily.scale != Scale::Raw) {
        throw Error(Errc::ScaleMismatch, "keyword '" + daily.keyword + "': daily series is already rescaled");
    }
    std::vector<WeekMetrics> weeks;
    weeks.reserve(weekly.points.size());
    for (const auto& w : weekly.points) {
        weeks.push_back({.week_start = w.date, .weekly_rsv = w.value});
    }
    for (const auto& d : daily.points) {
        auto& w = weeks[week_index(weeks, d.date, daily.keyword)];
        w.sum += d.value;
        ++w.count;
    }
    for (auto& w : weeks) {
        w.avg = w.count > 0 ? w.sum / w.count : 0.0;
    }
    return weeks;
}

std::vector<WeekMetrics> calculate_weights(std::vector<WeekMetrics> metrics) {
    for (auto& w : metrics) {
        w.weight = w.avg == 0.0 ? 1.0 : w.weekly_rsv / w.avg;
    }
    return metrics;
}

DailySeries rescale_values(const DailySeries& daily, const std::vector<WeekMetrics>& metrics) {
    if (daily.scale != Scale::Raw) {
        throw Error(Errc::ScaleMismatch, "keyword '" + daily.keyword + "': daily series is already rescaled");
    }
    DailySeries out{daily.keyword, {}, Scale::Rescaled};
    out.points.reserve(daily.points.size());
    for (const auto& d : daily.points) {
        const auto& w = metrics[week_index(metrics, d.date, daily.keyword)];
        out.points.push_back({d.date, w.avg == 0.0 ? d.value : d.value * w.weight});
    }
    return out;
}

DailySeries stitch(const WeeklySeries& weekly, const DailySeries& daily) {
    return rescale_values(daily, calculate_weights(calculate_weekly_metrics(weekly, daily)));
}

}  // namespace trendnet
