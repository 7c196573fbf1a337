#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trendnet {

enum class Errc {
    // ingest
    ParseError,
    NonConsecutiveDates,
    ValueOutOfRange,
    EmptySegment,
    IrregularWeekSpacing,
    EmptySeries,
    OverlapError,
    GapError,
    SpanError,
    DuplicateKeyword,
    UnknownKeyword,
    // stitch
    UncoveredDate,
    ScaleMismatch,
    // correlate
    LengthMismatch,
    NonFiniteInput,
    SeriesTooShort,
    MisalignedSeries,
    WindowTooLong,
    // netstat
    ThetaOutOfRange,
    EmptyPeriod,
    // timeline
    UnknownCategory,
    // general
    InvalidArgument,
    Io,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library. The message carries the
/// keyword/date/line context; callers that know the file name prepend it.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), detail_(message) {}

    Errc code() const noexcept { return code_; }

    /// The message without the error-code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace trendnet
