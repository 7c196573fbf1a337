#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendnet/date.hpp"
#include "trendnet/netstat.hpp"

namespace trendnet {

enum class EventCategory { Quarantine, Milestone, Variant, Policy, Vaccine };

std::string_view event_category_token(EventCategory c);
std::optional<EventCategory> parse_event_category(std::string_view token);

/// SVG stroke colour for an event marker.
std::string_view event_color(EventCategory c);

struct EventRecord {
    Date date;
    std::string label;
    EventCategory category;

    bool operator==(const EventRecord&) const = default;
};

struct EventLoad {
    std::vector<EventRecord> events;
    std::vector<std::string> warnings;
};

/// Reads `date,label,category` rows sorted by date (stable). Rows whose
/// first field is not a date are skipped. Throws UnknownCategory; events
/// outside `span` only produce a warning.
EventLoad load_events(std::string_view raw_csv, std::optional<DateRange> span = std::nullopt);

/// Metro Manila COVID-19 events, March 2020 to March 2021 (16 rows).
std::string_view default_events_csv();

std::string emit_events_csv(std::span<const EventRecord> events);

enum class JoinKind { Exact, NearestFollowing, Unmatched };

std::string_view join_kind_token(JoinKind k);

struct EventJoin {
    EventRecord event;
    JoinKind kind = JoinKind::Unmatched;
    std::optional<MetricPoint> point;
};

/// Pairs every event with the metric point on its date, or the first later
/// one. `metrics` should hold one (window, threshold) series.
std::vector<EventJoin> join_events(std::span<const MetricPoint> metrics, std::span<const EventRecord> events);

}  // namespace trendnet
