#pragma once

#include <vector>

#include "trendnet/series.hpp"

namespace trendnet {

/// Per-week aggregates of the raw daily values, and the factor that maps the
/// daily scale onto the weekly export's scale.
struct WeekMetrics {
    Date week_start;
    double weekly_rsv = 0.0;
    double sum = 0.0;
    int count = 0;
    double avg = 0.0;
    double weight = 1.0;

    Date week_end() const { return week_start + 7; }  // exclusive
};

/// Assigns each daily point to the week with `week_start <= date < week_start + 7`
/// and accumulates sum/count/avg. Weeks without daily points keep zeros.
/// Throws UncoveredDate for daily dates outside every week, ScaleMismatch for
/// already-rescaled input.
std::vector<WeekMetrics> calculate_weekly_metrics(const WeeklySeries& weekly, const DailySeries& daily);

/// weight = weekly_rsv / avg, or 1 when avg == 0.
std::vector<WeekMetrics> calculate_weights(std::vector<WeekMetrics> metrics);

/// Multiplies every daily value by its week's weight; values in weeks with a
/// zero average pass through unchanged.
DailySeries rescale_values(const DailySeries& daily, const std::vector<WeekMetrics>& metrics);

/// The three steps above in sequence.
DailySeries stitch(const WeeklySeries& weekly, const DailySeries& daily);

}  // namespace trendnet
