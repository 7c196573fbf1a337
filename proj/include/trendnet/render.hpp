#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendnet/date.hpp"
#include "trendnet/netstat.hpp"
#include "trendnet/timeline.hpp"

namespace trendnet {

enum class ChartMetric { Density, Clustering, ClusteringLocal };

std::optional<ChartMetric> parse_chart_metric(std::string_view token);
std::string_view chart_metric_token(ChartMetric m);
double metric_value(const MetricPoint& p, ChartMetric m);

/// One line of a chart: every point shares `threshold` and a window size.
struct ThresholdSeries {
    double threshold = 0.0;
    std::vector<MetricPoint> points;
};

/// Groups points by threshold (ascending) and sorts each group by date.
std::vector<ThresholdSeries> group_by_threshold(std::span<const MetricPoint> points);

struct ChartLayout {
    static constexpr int width = 1200;
    static constexpr int height = 500;
    static constexpr double left = 70.0;
    static constexpr double right = 1030.0;
    static constexpr double top = 50.0;
    static constexpr double bottom = 430.0;
};

/// Fixed line palette, assigned in ascending threshold order.
std::string_view threshold_color(std::size_t rank);

/// SVG 1.1 line chart: label dates on x with month ticks, metric on y in
/// [0, 1], one polyline per threshold, one dashed vertical per event inside
/// the date range. Output is a pure function of the inputs.
/// Throws EmptySeries, or InvalidArgument when window sizes differ.
std::string render_metric_chart(std::span<const ThresholdSeries> series, std::span<const EventRecord> events,
                                ChartMetric metric);

/// `label_date,window_days,threshold,edge_count,density,clustering_global,clustering_avg_local`
std::string emit_metrics_csv(std::span<const MetricPoint> points);
std::vector<MetricPoint> parse_metrics_csv(std::string_view csv);

/// JSON array of objects with the metrics CSV column names as keys.
std::string emit_metrics_json(std::span<const MetricPoint> points);

struct PersistenceReport {
    DateRange period;
    double threshold = 0.0;
    std::vector<PersistenceEntry> entries;
};

/// `period_start,period_end,threshold,members,count`, members joined with `|`.
std::string emit_persistence_csv(std::span<const PersistenceReport> reports);

/// `event_date,label,category,threshold,join,label_date,<metric>` per event and threshold.
std::string emit_event_join_csv(std::span<const ThresholdSeries> series, std::span<const EventRecord> events,
                                ChartMetric metric);

}  // namespace trendnet
