#include "trendnet/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "trendnet/correlate.hpp"
#include "trendnet/csv.hpp"
#include "trendnet/error.hpp"
#include "trendnet/ingest.hpp"
#include "trendnet/netstat.hpp"
#include "trendnet/parallel.hpp"
#include "trendnet/stitch.hpp"
#include "trendnet/timeline.hpp"

namespace trendnet::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::Io, path.string() + ": cannot open for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
        throw Error(Errc::Io, path.string() + ": cannot write");
    }
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(Errc::Io, dir.string() + ": cannot create directory");
    }
}

// Runs `fn`, prefixing any library error with the file it came from.
template <typename Fn>
auto in_file(const fs::path& path, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == Errc::Io) throw;
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::Io: return kIo;
        case Errc::WindowTooLong: return kInsufficientData;
        default: return kValidation;
    }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const fs::filesystem_error& e) {
        err << "error: Io: " << e.what() << "\n";
        return kIo;
    }
}

std::vector<fs::path> csv_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    std::ranges::sort(files);
    return files;
}

KeywordRegistry load_registry(const fs::path& path) {
    return in_file(path, [&] { return KeywordRegistry::parse(read_file(path)); });
}

struct StitchResult {
    DailySeries series;
    std::vector<std::string> warnings;
};

StitchResult stitch_keyword(const StitchOptions& opts, const std::string& keyword) {
    StitchResult result;
    const fs::path dir = opts.daily_dir / keyword;
    if (!fs::is_directory(dir)) {
        throw Error(Errc::Io, dir.string() + ": missing daily segment directory for keyword '" + keyword + "'");
    }
    std::vector<DailySegment> segments;
    for (const auto& file : csv_files(dir)) {
        auto seg = in_file(file, [&] { return parse_daily_segment(read_file(file), keyword); });
        if (!seg.is_export_normalized()) {
            result.warnings.push_back(file.string() + ": segment maximum is not 100");
        }
        segments.push_back(std::move(seg));
    }
    if (segments.empty()) {
        throw Error(Errc::Io, dir.string() + ": no daily segment files for keyword '" + keyword + "'");
    }
    auto daily = in_file(dir, [&] { return assemble_daily(std::move(segments), opts.span); });

    const fs::path weekly_path = opts.weekly_dir / (keyword + ".csv");
    if (!fs::is_regular_file(weekly_path)) {
        throw Error(Errc::Io, weekly_path.string() + ": missing weekly file for keyword '" + keyword + "'");
    }
    const auto weekly = in_file(weekly_path, [&] { return parse_weekly(read_file(weekly_path), keyword); });
    result.series = opts.raw ? std::move(daily) : in_file(weekly_path, [&] { return stitch(weekly, daily); });
    return result;
}

// Keyword order for analysis: explicit registry, else the registry written
// by stitch, else sorted file names.
std::vector<std::string> analysis_keywords(const AnalyzeOptions& opts) {
    if (opts.registry) return load_registry(*opts.registry).keywords();
    const fs::path saved = opts.stitched / "registry.csv";
    if (fs::is_regular_file(saved)) return load_registry(saved).keywords();
    std::vector<std::string> keywords;
    for (const auto& f : csv_files(opts.stitched)) keywords.push_back(f.stem().string());
    return keywords;
}

}  // namespace

std::string threshold_tag(double theta) { return csv::format_exact(theta); }

std::vector<DateRange> default_periods(Date data_start, DateRange labels) {
    std::vector<DateRange> periods;
    for (Date p = first_of_month_on_or_after(data_start); p <= labels.last; p = add_months(p, 3)) {
        DateRange r{std::max(p, labels.first), std::min(add_months(p, 3) - 1, labels.last)};
        if (!r.empty()) periods.push_back(r);
    }
    return periods;
}

int cmd_stitch(const StitchOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!fs::is_directory(opts.daily_dir)) {
            throw Error(Errc::Io, opts.daily_dir.string() + ": daily directory does not exist");
        }
        if (!fs::is_directory(opts.weekly_dir)) {
            throw Error(Errc::Io, opts.weekly_dir.string() + ": weekly directory does not exist");
        }
        const auto registry = opts.registry ? load_registry(*opts.registry) : KeywordRegistry::defaults();
        const auto keywords = registry.keywords();

        std::vector<StitchResult> results(keywords.size());
        std::vector<std::exception_ptr> failures(keywords.size());
        parallel_for(keywords.size(), [&](std::size_t k) {
            try {
                results[k] = stitch_keyword(opts, keywords[k]);
            } catch (...) {
                failures[k] = std::current_exception();
            }
        });
        // Report the first failing keyword in registry order.
        for (const auto& f : failures) {
            if (f) std::rethrow_exception(f);
        }

        ensure_directory(opts.out);
        for (const auto& r : results) {
            for (const auto& w : r.warnings) err << "warning: " << w << "\n";
            write_file(opts.out / (r.series.keyword + ".csv"), emit_series_csv(r.series));
        }
        write_file(opts.out / "registry.csv", registry.to_csv());
        out << "stitched " << results.size() << " keywords into " << opts.out.string() << "\n";
        return static_cast<int>(kOk);
    });
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.windows.empty() || opts.thresholds.empty()) {
            throw Error(Errc::InvalidArgument, "at least one window and one threshold are required");
        }
        for (int w : opts.windows) {
            if (w < 2) throw Error(Errc::InvalidArgument, "window " + std::to_string(w) + " is shorter than 2 days");
        }
        for (double t : opts.thresholds) {
            if (!(t > 0.0 && t < 1.0)) {
                throw Error(Errc::ThetaOutOfRange, "threshold " + csv::format_exact(t) + " is outside (0, 1)");
            }
        }
        for (const auto& p : opts.periods) {
            if (p.empty()) {
                throw Error(Errc::InvalidArgument, "period " + p.first.to_string() + ":" + p.last.to_string() +
                                                       " ends before it starts");
            }
        }
        if (!fs::is_directory(opts.stitched)) {
            throw Error(Errc::Io, opts.stitched.string() + ": stitched directory does not exist");
        }
        const auto keywords = analysis_keywords(opts);
        if (keywords.size() < 2) {
            throw Error(Errc::InvalidArgument, "need at least two keywords, found " + std::to_string(keywords.size()));
        }
        std::vector<DailySeries> series;
        for (const auto& kw : keywords) {
            const fs::path path = opts.stitched / (kw + ".csv");
            series.push_back(in_file(path, [&] { return parse_series_csv(read_file(path), kw, Scale::Rescaled); }));
        }
        const auto panel = SeriesPanel::from_series(series);
        for (int w : opts.windows) {
            if (static_cast<std::size_t>(w) > panel.days()) {
                throw Error(Errc::WindowTooLong, "window of " + std::to_string(w) + " days exceeds the " +
                                                     std::to_string(panel.days()) + " days of stitched data");
            }
        }

        ensure_directory(opts.out);
        std::size_t files = 0;
        for (int w : opts.windows) {
            const auto frames = rolling_correlation(panel, w);
            const std::string wtag = "w" + std::to_string(w);
            write_file(opts.out / ("correlations_" + wtag + ".csv"), emit_correlations_csv(frames, keywords));
            ++files;

            const DateRange labels{frames.front().label_date, frames.back().label_date};
            const auto periods = opts.periods.empty() ? default_periods(panel.start, labels) : opts.periods;

            for (double theta : opts.thresholds) {
                std::vector<GraphFrame> graphs(frames.size());
                std::vector<MetricPoint> metrics(frames.size());
                parallel_for(frames.size(), [&](std::size_t i) {
                    graphs[i] = threshold_adjacency(frames[i], theta);
                    metrics[i] = compute_metrics(graphs[i], w);
                });
                const std::string tag = wtag + "_t" + threshold_tag(theta);
                write_file(opts.out / ("metrics_" + tag + ".csv"), emit_metrics_csv(metrics));
                write_file(opts.out / ("metrics_" + tag + ".json"), emit_metrics_json(metrics));

                std::vector<PersistenceReport> pairs, triads;
                for (const auto& period : periods) {
                    const bool any = std::ranges::any_of(graphs, [&](const GraphFrame& g) {
                        return period.contains(g.label_date);
                    });
                    if (!any) {
                        err << "warning: no " << w << "-day frames inside period " << period.first.to_string()
                            << ":" << period.last.to_string() << "\n";
                        continue;
                    }
                    pairs.push_back({period, theta, pair_persistence(graphs, period, keywords)});
                    triads.push_back({period, theta, triad_persistence(graphs, period, keywords)});
                }
                write_file(opts.out / ("persistence_pairs_" + tag + ".csv"), emit_persistence_csv(pairs));
                write_file(opts.out / ("persistence_triads_" + tag + ".csv"), emit_persistence_csv(triads));
                files += 4;
            }
        }
        out << "wrote " << files << " files for " << keywords.size() << " keywords into " << opts.out.string()
            << "\n";
        return static_cast<int>(kOk);
    });
}

int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!fs::is_directory(opts.metrics)) {
            throw Error(Errc::Io, opts.metrics.string() + ": metrics directory does not exist");
        }
        std::vector<EventRecord> events;
        if (opts.events) {
            auto load = in_file(*opts.events, [&] { return load_events(read_file(*opts.events)); });
            events = std::move(load.events);
        } else {
            events = load_events(default_events_csv()).events;
        }

        std::map<int, std::vector<MetricPoint>> by_window;
        for (const auto& f : csv_files(opts.metrics)) {
            if (!f.filename().string().starts_with("metrics_")) continue;
            for (auto& p : in_file(f, [&] { return parse_metrics_csv(read_file(f)); })) {
                by_window[p.window_days].push_back(p);
            }
        }
        if (by_window.empty()) {
            throw Error(Errc::EmptySeries, opts.metrics.string() + ": no metrics_*.csv files with data");
        }

        const fs::path dir = opts.out.has_parent_path() ? opts.out.parent_path() : fs::path(".");
        const std::string stem = opts.out.stem().string();
        ensure_directory(dir);
        for (const auto& [window, points] : by_window) {
            const auto series = group_by_threshold(points);
            for (const auto& e : events) {
                if (e.date < series.front().points.front().label_date ||
                    e.date > series.front().points.back().label_date) {
                    err << "warning: DateOutOfSpan: event " << e.date.to_string() << " is outside the " << window
                        << "-day chart\n";
                }
            }
            const fs::path svg = dir / (stem + "_w" + std::to_string(window) + ".svg");
            write_file(svg, render_metric_chart(series, events, opts.metric));
            write_file(dir / (stem + "_w" + std::to_string(window) + "_events.csv"),
                       emit_event_join_csv(series, events, opts.metric));
            out << "wrote " << svg.string() << "\n";
        }
        return static_cast<int>(kOk);
    });
}

namespace {

// Options are collected as strings so that values from a config file can
// fill whatever the command line left unset.
class OptionSet {
public:
    explicit OptionSet(CLI::App* app) : app_(app) {
        app_->add_option("--config", config_, "key=value file; command-line flags take precedence");
    }

    void add(const std::string& name, std::string& target, const std::string& help) {
        values_.emplace(name, Value{app_->add_option("--" + name, target, help), &target});
    }

    void add_list(const std::string& name, std::vector<std::string>& target, const std::string& help) {
        lists_.emplace(name, List{app_->add_option("--" + name, target, help), &target});
    }

    void add_flag(const std::string& name, bool& target, const std::string& help) {
        flags_.emplace(name, Flag{app_->add_flag("--" + name, target, help), &target});
    }

    /// Applies the config file, if any. Throws Error on unknown keys.
    void apply_config() {
        if (config_.empty()) return;
        const fs::path path(config_);
        const auto text = read_file(path);
        for (const auto& line : csv::lines(text)) {
            auto body = csv::trim(line.text);
            if (body.empty() || body.front() == '#') continue;
            const auto eq = body.find('=');
            const std::string where = path.string() + ":" + std::to_string(line.number);
            if (eq == std::string_view::npos) {
                throw Error(Errc::ParseError, where + ": expected key=value");
            }
            std::string key(csv::trim(body.substr(0, eq)));
            if (key.starts_with("--")) key.erase(0, 2);
            std::string value(csv::trim(body.substr(eq + 1)));
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
                value = value.substr(1, value.size() - 2);
            }
            if (auto it = values_.find(key); it != values_.end()) {
                if (it->second.option->count() == 0) *it->second.target = value;
            } else if (auto lt = lists_.find(key); lt != lists_.end()) {
                if (lt->second.option->count() == 0) lt->second.target->push_back(value);
            } else if (auto ft = flags_.find(key); ft != flags_.end()) {
                if (ft->second.option->count() == 0) {
                    const auto v = to_lower(value);
                    if (v != "true" && v != "false" && v != "1" && v != "0") {
                        throw Error(Errc::ParseError, where + ": '" + key + "' expects true or false");
                    }
                    *ft->second.target = v == "true" || v == "1";
                }
            } else {
                throw Error(Errc::InvalidArgument, where + ": unknown key '" + key + "'");
            }
        }
    }

private:
    struct Value {
        CLI::Option* option;
        std::string* target;
    };
    struct List {
        CLI::Option* option;
        std::vector<std::string>* target;
    };
    struct Flag {
        CLI::Option* option;
        bool* target;
    };

    CLI::App* app_;
    std::string config_;
    std::map<std::string, Value> values_;
    std::map<std::string, List> lists_;
    std::map<std::string, Flag> flags_;
};

const std::string& require(const std::string& value, std::string_view flag) {
    if (value.empty()) {
        throw Error(Errc::InvalidArgument, "missing required option --" + std::string(flag));
    }
    return value;
}

Date parse_date_arg(const std::string& text, std::string_view flag) {
    const auto d = Date::parse(csv::trim(text));
    if (!d) throw Error(Errc::InvalidArgument, "--" + std::string(flag) + ": '" + text + "' is not a YYYY-MM-DD date");
    return *d;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    for (auto& f : csv::split(text)) {
        auto t = csv::trim(f);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

std::vector<int> parse_windows(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        const auto v = csv::parse_double(item);
        if (!v || *v != static_cast<double>(static_cast<int>(*v))) {
            throw Error(Errc::InvalidArgument, "--windows: '" + item + "' is not a whole number of days");
        }
        out.push_back(static_cast<int>(*v));
    }
    return out;
}

std::vector<double> parse_thresholds(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) {
        const auto v = csv::parse_double(item);
        if (!v) throw Error(Errc::InvalidArgument, "--thresholds: '" + item + "' is not a number");
        out.push_back(*v);
    }
    return out;
}

std::vector<DateRange> parse_periods(const std::vector<std::string>& items) {
    std::vector<DateRange> out;
    for (const auto& raw : items) {
        for (const auto& item : split_list(raw)) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw Error(Errc::InvalidArgument, "--period: '" + item + "' is not start:end");
            }
            out.push_back({parse_date_arg(item.substr(0, colon), "period"),
                           parse_date_arg(item.substr(colon + 1), "period")});
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Keyword search-interest networks: stitch daily exports, build rolling distance-correlation "
                 "graphs, and chart density and clustering."};
    app.name("trendnet");
    app.require_subcommand(1);

    struct {
        std::string daily_dir, weekly_dir, registry, out, start = "2020-03-16", end = "2021-03-15";
        bool raw = false;
    } s;
    auto* stitch_cmd = app.add_subcommand("stitch", "Assemble daily segments and rescale them with weekly data");
    OptionSet stitch_opts(stitch_cmd);
    stitch_opts.add("daily-dir", s.daily_dir, "Directory of daily/<keyword>/<n>.csv segments");
    stitch_opts.add("weekly-dir", s.weekly_dir, "Directory of weekly/<keyword>.csv files");
    stitch_opts.add("registry", s.registry, "keyword,category CSV (default: built-in 15 keywords)");
    stitch_opts.add("out", s.out, "Output directory for stitched/<keyword>.csv");
    stitch_opts.add("start", s.start, "First day of the analysis span");
    stitch_opts.add("end", s.end, "Last day of the analysis span");
    stitch_opts.add_flag("raw", s.raw, "Write assembled daily values without weekly rescaling");

    struct {
        std::string stitched, registry, windows = "15,30", thresholds = "0.4,0.5,0.6,0.8", out;
        std::vector<std::string> periods;
    } a;
    auto* analyze_cmd = app.add_subcommand("analyze", "Rolling correlation networks, metrics and persistence");
    OptionSet analyze_opts(analyze_cmd);
    analyze_opts.add("stitched", a.stitched, "Directory written by 'stitch'");
    analyze_opts.add("registry", a.registry, "keyword,category CSV fixing keyword order");
    analyze_opts.add("windows", a.windows, "Comma-separated window lengths in days");
    analyze_opts.add("thresholds", a.thresholds, "Comma-separated edge thresholds in (0,1)");
    analyze_opts.add_list("period", a.periods, "Persistence period start:end (repeatable)");
    analyze_opts.add("out", a.out, "Output directory");

    struct {
        std::string metrics, events, metric = "density", out;
    } r;
    auto* report_cmd = app.add_subcommand("report", "Render metric time series as SVG line charts");
    OptionSet report_opts(report_cmd);
    report_opts.add("metrics", r.metrics, "Directory written by 'analyze'");
    report_opts.add("events", r.events, "date,label,category CSV (default: bundled timeline)");
    report_opts.add("metric", r.metric, "density | clustering | clustering-local");
    report_opts.add("out", r.out, "Output SVG path; the window size is appended to the stem");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kValidation;
    }

    return guarded(err, [&]() -> int {
        if (stitch_cmd->parsed()) {
            stitch_opts.apply_config();
            StitchOptions o;
            o.daily_dir = require(s.daily_dir, "daily-dir");
            o.weekly_dir = require(s.weekly_dir, "weekly-dir");
            if (!s.registry.empty()) o.registry = s.registry;
            o.out = require(s.out, "out");
            o.span = {parse_date_arg(s.start, "start"), parse_date_arg(s.end, "end")};
            if (o.span.empty()) throw Error(Errc::InvalidArgument, "--end is before --start");
            o.raw = s.raw;
            return cmd_stitch(o, out, err);
        }
        if (analyze_cmd->parsed()) {
            analyze_opts.apply_config();
            AnalyzeOptions o;
            o.stitched = require(a.stitched, "stitched");
            if (!a.registry.empty()) o.registry = a.registry;
            o.windows = parse_windows(a.windows);
            o.thresholds = parse_thresholds(a.thresholds);
            o.periods = parse_periods(a.periods);
            o.out = require(a.out, "out");
            return cmd_analyze(o, out, err);
        }
        report_opts.apply_config();
        ReportOptions o;
        o.metrics = require(r.metrics, "metrics");
        if (!r.events.empty()) o.events = r.events;
        const auto metric = parse_chart_metric(r.metric);
        if (!metric) throw Error(Errc::InvalidArgument, "--metric must be density, clustering or clustering-local");
        o.metric = *metric;
        o.out = require(r.out, "out");
        return cmd_report(o, out, err);
    });
}

}  // namespace trendnet::cli
