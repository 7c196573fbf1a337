#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trendnet::csv {

/// One physical line of input with its 1-based line number.
struct Line {
    std::size_t number;
    std::string_view text;
};

/// Splits text into lines, dropping a trailing `\r` and a leading UTF-8 BOM.
std::vector<Line> lines(std::string_view text);

/// Splits one record into fields. Double-quoted fields may contain commas
/// and `""` escapes. Fields are not trimmed.
std::vector<std::string> split(std::string_view record);

/// Quotes a field only when it contains a comma, quote or newline.
std::string quote(std::string_view field);

std::string_view trim(std::string_view s);

/// Parses a finite decimal number; the whole (trimmed) field must be consumed.
std::optional<double> parse_double(std::string_view field);

/// Shortest representation that reads back to the same double.
std::string format_exact(double v);

/// `%.<digits>g` formatting.
std::string format_sig(double v, int digits);

}  // namespace trendnet::csv
