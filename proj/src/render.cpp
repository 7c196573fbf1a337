#include "trendnet/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "trendnet/csv.hpp"
#include "trendnet/error.hpp"

namespace trendnet {

namespace {

constexpr std::array<std::string_view, 4> kPalette{"#1f77b4", "#2ca02c", "#d62728", "#9467bd"};
constexpr std::array<std::string_view, 12> kMonths{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string_view metric_title(ChartMetric m) {
    switch (m) {
        case ChartMetric::Density: return "Network density";
        case ChartMetric::Clustering: return "Clustering coefficient";
        case ChartMetric::ClusteringLocal: return "Average local clustering coefficient";
    }
    return "";
}

// Maps label dates onto the horizontal plot extent.
class DateAxis {
public:
    DateAxis(Date first, Date last) : first_(first), span_(static_cast<double>(last - first)) {}

    double x(Date d) const {
        constexpr double w = ChartLayout::right - ChartLayout::left;
        if (span_ <= 0.0) return ChartLayout::left + w / 2.0;
        return ChartLayout::left + w * static_cast<double>(d - first_) / span_;
    }

private:
    Date first_;
    double span_;
};

double y_of(double v) {
    v = std::clamp(v, 0.0, 1.0);
    return ChartLayout::bottom - v * (ChartLayout::bottom - ChartLayout::top);
}

}  // namespace

std::optional<ChartMetric> parse_chart_metric(std::string_view token) {
    if (token == "density") return ChartMetric::Density;
    if (token == "clustering") return ChartMetric::Clustering;
    if (token == "clustering-local") return ChartMetric::ClusteringLocal;
    return std::nullopt;
}

std::string_view chart_metric_token(ChartMetric m) {
    switch (m) {
        case ChartMetric::Density: return "density";
        case ChartMetric::Clustering: return "clustering";
        case ChartMetric::ClusteringLocal: return "clustering-local";
    }
    return "";
}

double metric_value(const MetricPoint& p, ChartMetric m) {
    switch (m) {
        case ChartMetric::Density: return p.density;
        case ChartMetric::Clustering: return p.clustering_global;
        case ChartMetric::ClusteringLocal: return p.clustering_avg_local;
    }
    return 0.0;
}

std::string_view threshold_color(std::size_t rank) { return kPalette[rank % kPalette.size()]; }

std::vector<ThresholdSeries> group_by_threshold(std::span<const MetricPoint> points) {
    std::map<double, std::vector<MetricPoint>> groups;
    for (const auto& p : points) groups[p.threshold].push_back(p);
    std::vector<ThresholdSeries> out;
    for (auto& [theta, pts] : groups) {
        std::ranges::stable_sort(pts, {}, &MetricPoint::label_date);
        out.push_back({theta, std::move(pts)});
    }
    return out;
}

std::string render_metric_chart(std::span<const ThresholdSeries> series, std::span<const EventRecord> events,
                                ChartMetric metric) {
    if (series.empty()) {
        throw Error(Errc::EmptySeries, "chart needs at least one threshold series");
    }
    const int window = series.front().points.empty() ? 0 : series.front().points.front().window_days;
    Date first{}, last{};
    bool seen = false;
    for (const auto& s : series) {
        if (s.points.empty()) {
            throw Error(Errc::EmptySeries, "threshold " + csv::format_exact(s.threshold) + " has no points");
        }
        for (const auto& p : s.points) {
            if (p.window_days != window) {
                throw Error(Errc::InvalidArgument, "chart mixes " + std::to_string(window) + "-day and " +
                                                       std::to_string(p.window_days) + "-day windows");
            }
            if (!seen || p.label_date < first) first = p.label_date;
            if (!seen || p.label_date > last) last = p.label_date;
            seen = true;
        }
    }
    std::vector<const ThresholdSeries*> order;
    for (const auto& s : series) order.push_back(&s);
    std::ranges::stable_sort(order, {}, [](const ThresholdSeries* s) { return s->threshold; });

    const DateAxis axis(first, last);
    constexpr double L = ChartLayout::left, R = ChartLayout::right, T = ChartLayout::top, B = ChartLayout::bottom;
    std::string svg;
    svg += R"(<?xml version="1.0" encoding="UTF-8" standalone="no"?>)" "\n";
    svg += R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="1200" height="500" viewBox="0 0 1200 500")"
           R"( font-family="sans-serif" font-size="12pt">)" "\n";
    svg += R"(<rect x="0" y="0" width="1200" height="500" fill="white"/>)" "\n";
    svg += "<text class=\"title\" x=\"" + fmt((L + R) / 2) + "\" y=\"30\" text-anchor=\"middle\">" +
           std::string(metric_title(metric)) + ", " + std::to_string(window) + "-day window</text>\n";

    // y axis: gridlines and labels every 0.2
    svg += "<g class=\"y-axis\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i * 0.2;
        const std::string y = fmt(y_of(v));
        svg += "<line x1=\"" + fmt(L) + "\" y1=\"" + y + "\" x2=\"" + fmt(R) + "\" y2=\"" + y +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(L - 8) + "\" y=\"" + y + "\" text-anchor=\"end\" dominant-baseline=\"middle\">" +
               fmt(v).substr(0, 3) + "</text>\n";
    }
    svg += "</g>\n";

    // x axis: one tick per month start inside the range
    svg += "<g class=\"x-axis\">\n";
    svg += "<line x1=\"" + fmt(L) + "\" y1=\"" + fmt(B) + "\" x2=\"" + fmt(R) + "\" y2=\"" + fmt(B) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt(L) + "\" y1=\"" + fmt(T) + "\" x2=\"" + fmt(L) + "\" y2=\"" + fmt(B) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (Date m = first_of_month_on_or_after(first); m <= last; m = add_months(m, 1)) {
        const std::string x = fmt(axis.x(m));
        svg += "<line class=\"tick\" x1=\"" + x + "\" y1=\"" + fmt(B) + "\" x2=\"" + x + "\" y2=\"" + fmt(B + 6) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text class=\"tick-label\" x=\"" + x + "\" y=\"" + fmt(B + 24) + "\" text-anchor=\"middle\">" +
               std::string(kMonths[m.month() - 1]) + " " + std::to_string(m.year()) + "</text>\n";
    }
    svg += "</g>\n";

    svg += "<g class=\"events\">\n";
    for (const auto& e : events) {
        if (e.date < first || e.date > last) continue;
        const std::string x = fmt(axis.x(e.date));
        svg += "<line class=\"event\" x1=\"" + x + "\" y1=\"" + fmt(T) + "\" x2=\"" + x + "\" y2=\"" + fmt(B) +
               "\" stroke=\"" + std::string(event_color(e.category)) +
               "\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"><title>" + e.date.to_string() + ": " +
               xml_escape(e.label) + "</title></line>\n";
    }
    svg += "</g>\n";

    svg += "<g class=\"series\">\n";
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const auto& s = *order[rank];
        svg += "<polyline class=\"threshold-line\" data-threshold=\"" + csv::format_exact(s.threshold) +
               "\" fill=\"none\" stroke=\"" + std::string(threshold_color(rank)) +
               "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) svg += ' ';
            svg += fmt(axis.x(s.points[i].label_date)) + "," + fmt(y_of(metric_value(s.points[i], metric)));
        }
        svg += "\"/>\n";
    }
    svg += "</g>\n";

    svg += "<g class=\"legend\">\n";
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const double y = T + 10 + 24.0 * static_cast<double>(rank);
        svg += "<g class=\"legend-entry\"><line x1=\"" + fmt(R + 20) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(R + 50) + "\" y2=\"" + fmt(y) + "\" stroke=\"" + std::string(threshold_color(rank)) +
               "\" stroke-width=\"3\"/><text x=\"" + fmt(R + 58) + "\" y=\"" + fmt(y) +
               "\" dominant-baseline=\"middle\">threshold " + csv::format_exact(order[rank]->threshold) +
               "</text></g>\n";
    }
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

std::string emit_metrics_csv(std::span<const MetricPoint> points) {
    std::string out = "label_date,window_days,threshold,edge_count,density,clustering_global,clustering_avg_local\n";
    for (const auto& p : points) {
        out += p.label_date.to_string() + "," + std::to_string(p.window_days) + "," + csv::format_exact(p.threshold) +
               "," + std::to_string(p.edge_count) + "," + csv::format_exact(p.density) + "," +
               csv::format_exact(p.clustering_global) + "," + csv::format_exact(p.clustering_avg_local) + "\n";
    }
    return out;
}

std::vector<MetricPoint> parse_metrics_csv(std::string_view text) {
    std::vector<MetricPoint> out;
    for (const auto& line : csv::lines(text)) {
        if (csv::trim(line.text).empty()) continue;
        const auto f = csv::split(line.text);
        const auto date = Date::parse(csv::trim(f[0]));
        if (!date) continue;
        const std::string where = "metrics line " + std::to_string(line.number);
        if (f.size() != 7) {
            throw Error(Errc::ParseError, where + ": expected 7 fields, found " + std::to_string(f.size()));
        }
        std::array<double, 6> v{};
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto d = csv::parse_double(f[i + 1]);
            if (!d) {
                throw Error(Errc::ParseError, where + ": cannot parse '" + f[i + 1] + "'");
            }
            v[i] = *d;
        }
        out.push_back({*date, static_cast<int>(v[0]), v[1], static_cast<long>(v[2]), v[3], v[4], v[5]});
    }
    return out;
}

std::string emit_metrics_json(std::span<const MetricPoint> points) {
    auto arr = nlohmann::json::array();
    for (const auto& p : points) {
        arr.push_back({
            {"label_date", p.label_date.to_string()},
            {"window_days", p.window_days},
            {"threshold", p.threshold},
            {"edge_count", p.edge_count},
            {"density", p.density},
            {"clustering_global", p.clustering_global},
            {"clustering_avg_local", p.clustering_avg_local},
        });
    }
    return arr.dump(2) + "\n";
}

std::string emit_persistence_csv(std::span<const PersistenceReport> reports) {
    std::string out = "period_start,period_end,threshold,members,count\n";
    for (const auto& r : reports) {
        for (const auto& e : r.entries) {
            std::string members;
            for (std::size_t i = 0; i < e.members.size(); ++i) {
                if (i) members += '|';
                members += e.members[i];
            }
            out += r.period.first.to_string() + "," + r.period.last.to_string() + "," +
                   csv::format_exact(r.threshold) + "," + csv::quote(members) + "," + std::to_string(e.count) + "\n";
        }
    }
    return out;
}

std::string emit_event_join_csv(std::span<const ThresholdSeries> series, std::span<const EventRecord> events,
                                ChartMetric metric) {
    std::string out = "event_date,label,category,threshold,join,label_date," +
                      std::string(chart_metric_token(metric)) + "\n";
    for (const auto& s : series) {
        for (const auto& j : join_events(s.points, events)) {
            out += j.event.date.to_string() + "," + csv::quote(j.event.label) + "," +
                   std::string(event_category_token(j.event.category)) + "," + csv::format_exact(s.threshold) + "," +
                   std::string(join_kind_token(j.kind)) + ",";
            if (j.point) {
                out += j.point->label_date.to_string() + "," + csv::format_exact(metric_value(*j.point, metric));
            } else {
                out += ",";
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace trendnet
