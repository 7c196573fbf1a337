#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trendnet/date.hpp"
#include "trendnet/render.hpp"

namespace trendnet::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kIo = 3,
    kInsufficientData = 4,
};

struct StitchOptions {
    std::filesystem::path daily_dir;
    std::filesystem::path weekly_dir;
    std::optional<std::filesystem::path> registry;
    std::filesystem::path out;
    DateRange span = default_analysis_span();
    bool raw = false;  // write assembled daily values without rescaling
};

struct AnalyzeOptions {
    std::filesystem::path stitched;
    std::optional<std::filesystem::path> registry;
    std::vector<int> windows{15, 30};
    std::vector<double> thresholds{0.4, 0.5, 0.6, 0.8};
    std::vector<DateRange> periods;  // empty: three-month periods from the first full month
    std::filesystem::path out;
};

struct ReportOptions {
    std::filesystem::path metrics;
    std::optional<std::filesystem::path> events;  // bundled timeline when unset
    ChartMetric metric = ChartMetric::Density;
    std::filesystem::path out;
};

int cmd_stitch(const StitchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err);

/// Three-month periods starting at the first month boundary on or after
/// `data_start`, clipped to `labels` and dropping empty ones.
std::vector<DateRange> default_periods(Date data_start, DateRange labels);

/// File name stem for a threshold, e.g. `0.4`.
std::string threshold_tag(double theta);

/// Parses argv (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trendnet::cli
