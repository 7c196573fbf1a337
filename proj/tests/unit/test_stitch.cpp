#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "trendnet/error.hpp"
#include "trendnet/stitch.hpp"

using namespace trendnet;

namespace {

DailySeries daily(Date start, const std::vector<double>& values) {
    DailySeries s{"fever", {}, Scale::Raw};
    for (std::size_t i = 0; i < values.size(); ++i) s.points.push_back({start + static_cast<std::int64_t>(i), values[i]});
    return s;
}

WeeklySeries weekly(Date start, const std::vector<double>& values) {
    WeeklySeries w{"fever", {}};
    for (std::size_t i = 0; i < values.size(); ++i) w.points.push_back({start + 7 * static_cast<std::int64_t>(i), values[i]});
    return w;
}

const Date kSunday{2020, 3, 15};

}  // namespace

TEST(WeeklyMetrics, FullWeekSumsAndAverages) {
    const auto m = calculate_weekly_metrics(weekly(kSunday, {50}), daily(kSunday, {10, 20, 30, 40, 50, 60, 70}));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].sum, 280.0);
    EXPECT_EQ(m[0].count, 7);
    EXPECT_EQ(m[0].avg, 40.0);
    EXPECT_EQ(m[0].weekly_rsv, 50.0);
}

TEST(WeeklyMetrics, WeekWithoutDailyPointsStaysZeroAndWeighsOne) {
    // Daily data covers only the first of two weeks.
    const auto m = calculate_weights(calculate_weekly_metrics(weekly(kSunday, {50, 80}), daily(kSunday, {1, 2, 3})));
    EXPECT_EQ(m[1].sum, 0.0);
    EXPECT_EQ(m[1].count, 0);
    EXPECT_EQ(m[1].avg, 0.0);
    EXPECT_EQ(m[1].weight, 1.0);
}

TEST(WeeklyMetrics, PartialFinalWeek) {
    const auto m = calculate_weekly_metrics(weekly(kSunday, {10, 10}),
                                            daily(kSunday, {1, 1, 1, 1, 1, 1, 1, 10, 20, 30}));
    EXPECT_EQ(m[1].count, 3);
    EXPECT_EQ(m[1].avg, 20.0);
}

TEST(WeeklyMetrics, HalfOpenWeekBoundaries) {
    // Day 7 after a week start belongs to the next week.
    const auto m = calculate_weekly_metrics(weekly(kSunday, {1, 1}), daily(kSunday + 6, {5, 9}));
    EXPECT_EQ(m[0].count, 1);
    EXPECT_EQ(m[0].sum, 5.0);
    EXPECT_EQ(m[1].count, 1);
    EXPECT_EQ(m[1].sum, 9.0);
}

TEST(WeeklyMetrics, UncoveredDatesAreErrors) {
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Io;
    };
    EXPECT_EQ(code([] { calculate_weekly_metrics(weekly(kSunday, {5}), daily(kSunday - 1, {1, 2})); }),
              Errc::UncoveredDate);
    EXPECT_EQ(code([] { calculate_weekly_metrics(weekly(kSunday, {5}), daily(kSunday + 6, {1, 2})); }),
              Errc::UncoveredDate);
    auto rescaled = daily(kSunday, {1});
    rescaled.scale = Scale::Rescaled;
    EXPECT_EQ(code([&] { calculate_weekly_metrics(weekly(kSunday, {5}), rescaled); }), Errc::ScaleMismatch);
}

TEST(Weights, PiecewiseRule) {
    std::vector<WeekMetrics> m(3);
    m[0].weekly_rsv = 50, m[0].avg = 40;
    m[1].weekly_rsv = 37, m[1].avg = 37;
    m[2].weekly_rsv = 80, m[2].avg = 0;
    m[0].sum = 280;
    const auto w = calculate_weights(m);
    EXPECT_EQ(w[0].weight, 1.25);
    EXPECT_EQ(w[1].weight, 1.0);
    EXPECT_EQ(w[2].weight, 1.0);
    EXPECT_EQ(w[0].sum, 280.0);  // other fields untouched
    EXPECT_EQ(w[0].avg, 40.0);
}

TEST(Rescale, MultipliesByTheWeekWeight) {
    const auto d = daily(kSunday, {10, 20, 30, 40, 50, 60, 70, 0, 0, 0});
    // week 1: avg 40 -> weight 50/40 = 1.25; week 2: avg 0 -> passthrough
    const auto m = calculate_weights(calculate_weekly_metrics(weekly(kSunday, {50, 90}), d));
    const auto r = rescale_values(d, m);
    EXPECT_EQ(r.scale, Scale::Rescaled);
    EXPECT_EQ(r.points[0].value, 12.5);
    EXPECT_EQ(r.points[6].value, 87.5);
    EXPECT_EQ(r.points[7].value, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(r.points[i].date, d.points[i].date);
}

TEST(Rescale, ZeroAverageWeekPassesThrough) {
    std::vector<WeekMetrics> m{{.week_start = kSunday, .weekly_rsv = 80, .sum = 0, .count = 0, .avg = 0, .weight = 3}};
    const auto r = rescale_values(daily(kSunday, {7}), m);
    EXPECT_EQ(r.points[0].value, 7.0);
}

// Week-mean restoration, idempotence, non-negativity and within-week order,
// over random data with random week alignment.
TEST(StitchProperties, RandomisedInvariants) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::uniform_int_distribution<int> offset(0, 6), length(1, 120);
    std::bernoulli_distribution zero(0.1);
    for (int trial = 0; trial < 300; ++trial) {
        const Date first_week = kSunday + 7 * trial;
        const Date start = first_week + offset(rng);
        std::vector<double> vals(static_cast<std::size_t>(length(rng)));
        for (auto& v : vals) v = zero(rng) ? 0.0 : std::round(value(rng));
        const auto d = daily(start, vals);
        const auto weeks_needed = static_cast<std::size_t>((d.span().last - first_week) / 7 + 1);
        std::vector<double> wv(weeks_needed);
        for (auto& v : wv) v = std::round(value(rng));
        const auto w = weekly(first_week, wv);

        const auto metrics = calculate_weights(calculate_weekly_metrics(w, d));
        const auto r = rescale_values(d, metrics);
        std::map<std::int64_t, std::pair<double, int>> per_week;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto week = (r.points[i].date - first_week) / 7;
            per_week[week].first += r.points[i].value;
            per_week[week].second += 1;
            EXPECT_GE(r.points[i].value, 0.0);
            if (d.points[i].value == 0.0) {
                EXPECT_EQ(r.points[i].value, 0.0);
            }
            for (std::size_t j = 0; j < i; ++j) {
                if ((d.points[j].date - first_week) / 7 == week && d.points[j].value < d.points[i].value) {
                    EXPECT_LE(r.points[j].value, r.points[i].value);
                }
            }
        }
        for (const auto& m : metrics) {
            if (m.avg > 0.0) {
                const auto& [sum, n] = per_week[(m.week_start - first_week) / 7];
                EXPECT_NEAR(sum / n, m.weekly_rsv, 1e-9);
            }
        }

        // Weekly values equal to the daily week averages leave the series unchanged.
        std::vector<double> matched;
        for (const auto& m : calculate_weekly_metrics(w, d)) matched.push_back(m.avg);
        const auto same = stitch(weekly(first_week, matched), d);
        for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(same.points[i].value, d.points[i].value, 1e-9);
    }
}
