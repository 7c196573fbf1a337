#include "trendnet/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>

#include "trendnet/csv.hpp"
#include "trendnet/error.hpp"

namespace trendnet {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 5> kCategoryTokens{{
    {Category::SymptomsEnglish, "SymptomsEnglish"},
    {Category::SymptomsFilipino, "SymptomsFilipino"},
    {Category::FaceWearing, "FaceWearing"},
    {Category::Quarantine, "Quarantine"},
    {Category::NewNormal, "NewNormal"},
}};

struct Row {
    std::size_t line;
    DatedValue point;
};

// Data rows of a `<date>,<value>` file. `max_value` bounds accepted values.
std::vector<Row> parse_rows(std::string_view text, std::string_view keyword, double max_value) {
    std::vector<Row> rows;
    for (const auto& line : csv::lines(text)) {
        if (csv::trim(line.text).empty()) {
            continue;
        }
        const auto fields = csv::split(line.text);
        const auto date = Date::parse(csv::trim(fields[0]));
        if (!date) {
            continue;
        }
        const std::string where = "keyword '" + std::string(keyword) + "', line " +
                                  std::to_string(line.number) + ", date " + date->to_string();
        if (fields.size() < 2) {
            throw Error(Errc::ParseError, where + ": missing value");
        }
        const auto field = csv::trim(fields[1]);
        double value = 0.0;
        if (field == "<1") {
            value = kBelowOneValue;
        } else if (const auto v = csv::parse_double(field)) {
            value = *v;
        } else {
            throw Error(Errc::ParseError, where + ": cannot parse value '" + std::string(field) + "'");
        }
        if (value < 0.0 || value > max_value) {
            throw Error(Errc::ValueOutOfRange,
                        where + ": value " + csv::format_exact(value) + " outside [0," +
                            csv::format_exact(max_value) + "]");
        }
        rows.push_back({line.number, {*date, value}});
    }
    return rows;
}

void require_consecutive(const std::vector<Row>& rows, std::string_view keyword) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Date expected = rows[i - 1].point.date + 1;
        if (rows[i].point.date != expected) {
            throw Error(Errc::NonConsecutiveDates,
                        "keyword '" + std::string(keyword) + "', line " + std::to_string(rows[i].line) +
                            ": expected " + expected.to_string() + " but found " +
                            rows[i].point.date.to_string());
        }
    }
}

std::vector<DatedValue> points_of(const std::vector<Row>& rows) {
    std::vector<DatedValue> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.point);
    return out;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::ranges::transform(out, out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view category_token(Category c) {
    for (const auto& [cat, token] : kCategoryTokens) {
        if (cat == c) return token;
    }
    return {};
}

std::optional<Category> parse_category(std::string_view token) {
    token = csv::trim(token);
    for (const auto& [cat, name] : kCategoryTokens) {
        if (name == token) return cat;
    }
    return std::nullopt;
}

bool DailySegment::is_export_normalized() const {
    const bool all_zero = std::ranges::all_of(points, [](const DatedValue& p) { return p.value == 0.0; });
    const bool has_max = std::ranges::any_of(points, [](const DatedValue& p) { return p.value == 100.0; });
    return all_zero || has_max;
}

KeywordRegistry KeywordRegistry::defaults() {
    KeywordRegistry r;
    for (auto kw : {"cough", "fever", "flu", "headache", "rashes"}) r.add(kw, Category::SymptomsEnglish);
    for (auto kw : {"lagnat", "sipon", "ubo"}) r.add(kw, Category::SymptomsFilipino);
    for (auto kw : {"masks", "face shield"}) r.add(kw, Category::FaceWearing);
    for (auto kw : {"ecq", "quarantine"}) r.add(kw, Category::Quarantine);
    for (auto kw : {"frontliners", "social distancing", "work from home"}) r.add(kw, Category::NewNormal);
    return r;
}

KeywordRegistry KeywordRegistry::parse(std::string_view text) {
    KeywordRegistry r;
    bool first = true;
    for (const auto& line : csv::lines(text)) {
        if (csv::trim(line.text).empty()) continue;
        const auto fields = csv::split(line.text);
        const bool header = first && fields.size() >= 2 && to_lower(csv::trim(fields[0])) == "keyword" &&
                            to_lower(csv::trim(fields[1])) == "category";
        first = false;
        if (header) continue;
        if (fields.size() != 2) {
            throw Error(Errc::ParseError, "registry line " + std::to_string(line.number) +
                                              ": expected 'keyword,category'");
        }
        const auto cat = parse_category(fields[1]);
        if (!cat) {
            throw Error(Errc::UnknownCategory, "registry line " + std::to_string(line.number) +
                                                   ": unknown category '" + std::string(csv::trim(fields[1])) +
                                                   "'");
        }
        r.add(csv::trim(fields[0]), *cat);
    }
    return r;
}

void KeywordRegistry::add(std::string_view keyword, Category category) {
    auto kw = to_lower(csv::trim(keyword));
    if (kw.empty()) {
        throw Error(Errc::InvalidArgument, "empty keyword");
    }
    if (contains(kw)) {
        throw Error(Errc::DuplicateKeyword, "keyword '" + kw + "' registered twice");
    }
    entries_.push_back({std::move(kw), category});
}

std::vector<std::string> KeywordRegistry::keywords() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.keyword);
    return out;
}

std::optional<std::size_t> KeywordRegistry::index_of(std::string_view keyword) const {
    const auto kw = to_lower(keyword);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].keyword == kw) return i;
    }
    return std::nullopt;
}

std::string KeywordRegistry::to_csv() const {
    std::string out = "keyword,category\n";
    for (const auto& e : entries_) {
        out += csv::quote(e.keyword) + "," + std::string(category_token(e.category)) + "\n";
    }
    return out;
}

DailySegment parse_daily_segment(std::string_view raw_csv, std::string_view keyword) {
    const auto rows = parse_rows(raw_csv, keyword, 100.0);
    if (rows.empty()) {
        throw Error(Errc::EmptySegment, "keyword '" + std::string(keyword) + "': no data rows");
    }
    require_consecutive(rows, keyword);
    return {to_lower(keyword), points_of(rows)};
}

WeeklySeries parse_weekly(std::string_view raw_csv, std::string_view keyword) {
    const auto rows = parse_rows(raw_csv, keyword, 100.0);
    if (rows.empty()) {
        throw Error(Errc::EmptySeries, "keyword '" + std::string(keyword) + "': no weekly rows");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto step = rows[i].point.date - rows[i - 1].point.date;
        if (step != 7) {
            throw Error(Errc::IrregularWeekSpacing,
                        "keyword '" + std::string(keyword) + "', line " + std::to_string(rows[i].line) + ": " +
                            rows[i].point.date.to_string() + " is " + std::to_string(step) + " days after " +
                            rows[i - 1].point.date.to_string());
        }
    }
    return {to_lower(keyword), points_of(rows)};
}

DailySeries assemble_daily(std::vector<DailySegment> segments, DateRange span) {
    if (segments.empty()) {
        throw Error(Errc::SpanError, "no daily segments");
    }
    std::ranges::stable_sort(segments, {}, [](const DailySegment& s) { return s.start_date(); });
    const std::string keyword = segments.front().keyword;

    DailySeries out{keyword, {}, Scale::Raw};
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const auto& seg = segments[k];
        if (seg.points.empty()) {
            throw Error(Errc::EmptySegment, "keyword '" + keyword + "': empty segment");
        }
        if (k > 0) {
            const Date prev_end = segments[k - 1].end_date();
            if (seg.start_date() <= prev_end) {
                throw Error(Errc::OverlapError, "keyword '" + keyword + "': segment starting " +
                                                    seg.start_date().to_string() +
                                                    " overlaps previous segment ending " + prev_end.to_string());
            }
            if (seg.start_date() != prev_end + 1) {
                throw Error(Errc::GapError, "keyword '" + keyword + "': missing date " +
                                                (prev_end + 1).to_string() + " (next segment starts " +
                                                seg.start_date().to_string() + ")");
            }
        }
        for (const auto& p : seg.points) {
            if (span.contains(p.date)) out.points.push_back(p);
        }
    }
    const Date first = segments.front().start_date();
    const Date last = segments.back().end_date();
    if (first > span.first || last < span.last) {
        throw Error(Errc::SpanError, "keyword '" + keyword + "': segments cover " + first.to_string() + ".." +
                                         last.to_string() + " but the analysis span is " +
                                         span.first.to_string() + ".." + span.last.to_string());
    }
    return out;
}

std::string emit_series_csv(const DailySeries& series) {
    std::string out = "date,value\n";
    for (const auto& p : series.points) {
        out += p.date.to_string() + "," + csv::format_exact(p.value) + "\n";
    }
    return out;
}

std::string emit_weekly_csv(const WeeklySeries& series) {
    std::string out = "week_start,value\n";
    for (const auto& p : series.points) {
        out += p.date.to_string() + "," + csv::format_exact(p.value) + "\n";
    }
    return out;
}

DailySeries parse_series_csv(std::string_view text, std::string_view keyword, Scale scale) {
    const double max_value = scale == Scale::Raw ? 100.0 : std::numeric_limits<double>::max();
    const auto rows = parse_rows(text, keyword, max_value);
    if (rows.empty()) {
        throw Error(Errc::EmptySeries, "keyword '" + std::string(keyword) + "': no data rows");
    }
    require_consecutive(rows, keyword);
    return {to_lower(keyword), points_of(rows), scale};
}

}  // namespace trendnet
