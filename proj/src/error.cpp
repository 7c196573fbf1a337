#include "trendnet/error.hpp"

namespace trendnet {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::ParseError: return "ParseError";
        case Errc::NonConsecutiveDates: return "NonConsecutiveDates";
        case Errc::ValueOutOfRange: return "ValueOutOfRange";
        case Errc::EmptySegment: return "EmptySegment";
        case Errc::IrregularWeekSpacing: return "IrregularWeekSpacing";
        case Errc::EmptySeries: return "EmptySeries";
        case Errc::OverlapError: return "OverlapError";
        case Errc::GapError: return "GapError";
        case Errc::SpanError: return "SpanError";
        case Errc::DuplicateKeyword: return "DuplicateKeyword";
        case Errc::UnknownKeyword: return "UnknownKeyword";
        case Errc::UncoveredDate: return "UncoveredDate";
        case Errc::ScaleMismatch: return "ScaleMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::NonFiniteInput: return "NonFiniteInput";
        case Errc::SeriesTooShort: return "SeriesTooShort";
        case Errc::MisalignedSeries: return "MisalignedSeries";
        case Errc::WindowTooLong: return "WindowTooLong";
        case Errc::ThetaOutOfRange: return "ThetaOutOfRange";
        case Errc::EmptyPeriod: return "EmptyPeriod";
        case Errc::UnknownCategory: return "UnknownCategory";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace trendnet
