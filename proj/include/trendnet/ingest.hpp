#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendnet/date.hpp"
#include "trendnet/series.hpp"

namespace trendnet {

enum class Category { SymptomsEnglish, SymptomsFilipino, FaceWearing, Quarantine, NewNormal };

std::string_view category_token(Category c);
std::optional<Category> parse_category(std::string_view token);

struct KeywordEntry {
    std::string keyword;
    Category category;

    bool operator==(const KeywordEntry&) const = default;
};

/// Ordered set of keywords. Order defines matrix row/column indices downstream.
class KeywordRegistry {
public:
    /// The fifteen keywords across five categories used for Metro Manila.
    static KeywordRegistry defaults();

    /// Reads `keyword,category` rows; a leading header row is skipped.
    static KeywordRegistry parse(std::string_view csv);

    /// Lowercases the keyword. Throws DuplicateKeyword when it is already present.
    void add(std::string_view keyword, Category category);

    std::size_t size() const { return entries_.size(); }
    const std::vector<KeywordEntry>& entries() const { return entries_; }
    std::vector<std::string> keywords() const;
    std::optional<std::size_t> index_of(std::string_view keyword) const;
    bool contains(std::string_view keyword) const { return index_of(keyword).has_value(); }

    std::string to_csv() const;

private:
    std::vector<KeywordEntry> entries_;
};

std::string to_lower(std::string_view s);

/// Value written by the export for "more than zero but under one".
inline constexpr double kBelowOneValue = 0.5;

/// Parses a Google-Trends-style daily export. Rows whose first field is not
/// an ISO date are treated as preamble and skipped.
DailySegment parse_daily_segment(std::string_view raw_csv, std::string_view keyword);

WeeklySeries parse_weekly(std::string_view raw_csv, std::string_view keyword);

/// Concatenates contiguous segments and trims the result to `span`.
/// Throws OverlapError, GapError, or SpanError.
DailySeries assemble_daily(std::vector<DailySegment> segments,
                           DateRange span = default_analysis_span());

/// Canonical `date,value` emitters; values use the shortest exact representation.
std::string emit_series_csv(const DailySeries& series);
std::string emit_weekly_csv(const WeeklySeries& series);

/// Reads a canonical `date,value` file back. Dates must be consecutive.
DailySeries parse_series_csv(std::string_view csv, std::string_view keyword, Scale scale);

}  // namespace trendnet
