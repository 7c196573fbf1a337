#include "trendnet/timeline.hpp"

#include <algorithm>
#include <array>

#include "trendnet/csv.hpp"
#include "trendnet/error.hpp"

namespace trendnet {

namespace {

struct CategoryInfo {
    EventCategory category;
    std::string_view token;
    std::string_view color;
};

constexpr std::array<CategoryInfo, 5> kCategories{{
    {EventCategory::Quarantine, "Quarantine", "magenta"},
    {EventCategory::Milestone, "Milestone", "black"},
    {EventCategory::Variant, "Variant", "black"},
    {EventCategory::Policy, "Policy", "orange"},
    {EventCategory::Vaccine, "Vaccine", "yellow"},
}};

constexpr std::string_view kDefaultEvents = R"csv(date,label,category
2020-04-07,Enhanced Community Quarantine (ECQ) in Metro Manila extended to Apr 30,Quarantine
2020-04-24,ECQ in Metro Manila extended to May 15,Quarantine
2020-05-12,IATF puts Modified Enhanced Community Quarantine (MECQ) in Metro Manila,Quarantine
2020-05-26,Metro Manila elected mayors agreed General Community Quarantine (GCQ),Quarantine
2020-06-01,GCQ begins in Metro Manila,Quarantine
2020-08-02,"100,000 COVID-19 recorded cases surpassed nationwide",Milestone
2020-08-04,MECQ imposed again in Metro Manila,Quarantine
2020-08-19,Philippine Health Insurance Corporation (PhilHealth) alleged corruption scandal,Policy
2020-09-18,"Second emergency ""Bayanihan"" National Law signed (financial stimulus package)",Policy
2020-09-28,All Philippine provinces infected with COVID-19,Milestone
2020-12-19,Alpha variant detected in United Kingdom,Variant
2021-01-09,National government monitors Beta/Delta variants overseas,Variant
2021-01-14,Pfizer COVID-19 vaccine approved for emergency use,Vaccine
2021-01-28,AstraZeneca COVID-19 vaccine approved for emergency use,Vaccine
2021-03-02,Beta variant detected in Pasay City (Metro Manila),Variant
2021-03-12,Gamma variant detected in the Philippines,Variant
)csv";

}  // namespace

std::string_view event_category_token(EventCategory c) {
    for (const auto& info : kCategories) {
        if (info.category == c) return info.token;
    }
    return {};
}

std::optional<EventCategory> parse_event_category(std::string_view token) {
    token = csv::trim(token);
    for (const auto& info : kCategories) {
        if (info.token == token) return info.category;
    }
    return std::nullopt;
}

std::string_view event_color(EventCategory c) {
    for (const auto& info : kCategories) {
        if (info.category == c) return info.color;
    }
    return "black";
}

std::string_view default_events_csv() { return kDefaultEvents; }

EventLoad load_events(std::string_view raw_csv, std::optional<DateRange> span) {
    EventLoad out;
    for (const auto& line : csv::lines(raw_csv)) {
        if (csv::trim(line.text).empty()) continue;
        const auto fields = csv::split(line.text);
        const auto date = Date::parse(csv::trim(fields[0]));
        if (!date) continue;
        if (fields.size() != 3) {
            throw Error(Errc::ParseError, "events line " + std::to_string(line.number) +
                                              ": expected 'date,label,category'");
        }
        const auto category = parse_event_category(fields[2]);
        if (!category) {
            throw Error(Errc::UnknownCategory, "events line " + std::to_string(line.number) + ": unknown category '" +
                                                   std::string(csv::trim(fields[2])) + "'");
        }
        if (span && !span->contains(*date)) {
            out.warnings.push_back("DateOutOfSpan: events line " + std::to_string(line.number) + ": " +
                                   date->to_string() + " is outside " + span->first.to_string() + ".." +
                                   span->last.to_string());
        }
        out.events.push_back({*date, std::string(csv::trim(fields[1])), *category});
    }
    std::ranges::stable_sort(out.events, {}, &EventRecord::date);
    return out;
}

std::string emit_events_csv(std::span<const EventRecord> events) {
    std::string out = "date,label,category\n";
    for (const auto& e : events) {
        out += e.date.to_string() + "," + csv::quote(e.label) + "," + std::string(event_category_token(e.category)) +
               "\n";
    }
    return out;
}

std::string_view join_kind_token(JoinKind k) {
    switch (k) {
        case JoinKind::Exact: return "exact";
        case JoinKind::NearestFollowing: return "nearest_following";
        case JoinKind::Unmatched: return "unmatched";
    }
    return "unmatched";
}

std::vector<EventJoin> join_events(std::span<const MetricPoint> metrics, std::span<const EventRecord> events) {
    std::vector<const MetricPoint*> sorted;
    sorted.reserve(metrics.size());
    for (const auto& m : metrics) sorted.push_back(&m);
    std::ranges::stable_sort(sorted, {}, [](const MetricPoint* m) { return m->label_date; });

    std::vector<EventJoin> out;
    out.reserve(events.size());
    for (const auto& e : events) {
        const auto it = std::ranges::lower_bound(sorted, e.date, {}, [](const MetricPoint* m) { return m->label_date; });
        if (it == sorted.end()) {
            out.push_back({e, JoinKind::Unmatched, std::nullopt});
        } else {
            out.push_back({e, (*it)->label_date == e.date ? JoinKind::Exact : JoinKind::NearestFollowing, **it});
        }
    }
    return out;
}

}  // namespace trendnet
