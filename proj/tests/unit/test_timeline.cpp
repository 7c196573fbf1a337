#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "trendnet/error.hpp"
#include "trendnet/timeline.hpp"

using namespace trendnet;

namespace {

std::vector<MetricPoint> labels(Date first, Date last) {
    std::vector<MetricPoint> out;
    for (Date d = first; d <= last; d += 1) out.push_back({.label_date = d, .window_days = 15, .threshold = 0.5});
    return out;
}

}  // namespace

TEST(Events, DefaultTimelineHasSixteenSortedRows) {
    const auto load = load_events(default_events_csv(), default_analysis_span());
    ASSERT_EQ(load.events.size(), 16u);
    EXPECT_TRUE(load.warnings.empty());
    EXPECT_TRUE(std::ranges::is_sorted(load.events, {}, &EventRecord::date));
    EXPECT_EQ(load.events[5].label, "100,000 COVID-19 recorded cases surpassed nationwide");
    EXPECT_EQ(load.events[8].label, "Second emergency \"Bayanihan\" National Law signed (financial stimulus package)");
}

TEST(Events, CategoryColours) {
    const auto q = load_events("2020-04-07,ECQ in Metro Manila extended to Apr 30,Quarantine\n").events;
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0].category, EventCategory::Quarantine);
    EXPECT_EQ(event_color(q[0].category), "magenta");

    const auto v = load_events("2021-01-14,Pfizer COVID-19 vaccine approved for emergency use,Vaccine\n").events;
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(event_color(v[0].category), "yellow");
    EXPECT_EQ(event_color(EventCategory::Policy), "orange");
    EXPECT_EQ(event_color(EventCategory::Milestone), "black");
    EXPECT_EQ(event_color(EventCategory::Variant), "black");
}

TEST(Events, EmptyFileGivesEmptyTimeline) {
    EXPECT_TRUE(load_events("").events.empty());
    EXPECT_TRUE(load_events("date,label,category\n").events.empty());
}

TEST(Events, UnknownCategoryIsAnError) {
    try {
        load_events("date,label,category\n2020-05-01,Something,Lockdown\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownCategory);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Events, OutOfSpanDatesOnlyWarn) {
    const auto load = load_events("2019-12-31,Early,Milestone\n2020-05-01,Inside,Policy\n", default_analysis_span());
    EXPECT_EQ(load.events.size(), 2u);
    ASSERT_EQ(load.warnings.size(), 1u);
    EXPECT_EQ(load.warnings[0].rfind("DateOutOfSpan", 0), 0u);
    EXPECT_NE(load.warnings[0].find("2019-12-31"), std::string::npos);
}

TEST(Events, SortIsStable) {
    const auto e = load_events("2020-06-01,B,Policy\n2020-05-01,A,Policy\n2020-06-01,C,Vaccine\n").events;
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[0].label, "A");
    EXPECT_EQ(e[1].label, "B");
    EXPECT_EQ(e[2].label, "C");
}

TEST(Events, BundledFileMatchesEmbeddedTimeline) {
    const auto file = testkit::read_text(std::filesystem::path(TRENDNET_SOURCE_DIR) / "events" / "ph_covid_2020_2021.csv");
    EXPECT_EQ(file, default_events_csv());
    const auto events = load_events(file).events;
    EXPECT_EQ(load_events(emit_events_csv(events)).events, events);
}

TEST(JoinEvents, ExactNearestFollowingAndUnmatched) {
    const auto metrics = labels(Date(2020, 3, 31), Date(2021, 3, 16));
    const std::vector<EventRecord> events{
        {Date(2020, 3, 20), "before", EventCategory::Milestone},
        {Date(2020, 4, 7), "on", EventCategory::Quarantine},
        {Date(2021, 3, 20), "after", EventCategory::Variant},
    };
    const auto j = join_events(metrics, events);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0].kind, JoinKind::NearestFollowing);
    EXPECT_EQ(j[0].point->label_date, Date(2020, 3, 31));
    EXPECT_EQ(j[1].kind, JoinKind::Exact);
    EXPECT_EQ(j[1].point->label_date, Date(2020, 4, 7));
    EXPECT_EQ(j[2].kind, JoinKind::Unmatched);
    EXPECT_FALSE(j[2].point);
    for (std::size_t i = 0; i < j.size(); ++i) EXPECT_EQ(j[i].event, events[i]);
}

TEST(JoinEvents, EveryEventAppearsOnceWithSparseLabels) {
    std::vector<MetricPoint> metrics;
    for (Date d = Date(2020, 4, 1); d <= Date(2021, 3, 1); d += 7) metrics.push_back({.label_date = d});
    const auto events = load_events(default_events_csv()).events;
    const auto j = join_events(metrics, events);
    ASSERT_EQ(j.size(), events.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        EXPECT_EQ(j[i].event, events[i]);
        if (j[i].point) {
            EXPECT_GE(j[i].point->label_date, events[i].date);
            EXPECT_LT(j[i].point->label_date - events[i].date, 7);
        }
    }
    EXPECT_EQ(j.back().kind, JoinKind::Unmatched);
}
