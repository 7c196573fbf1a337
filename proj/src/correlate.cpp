#include "trendnet/correlate.hpp"

#include "trendnet/csv.hpp"
#include "trendnet/dcor.hpp"
#include "trendnet/error.hpp"
#include "trendnet/parallel.hpp"

namespace trendnet {

SeriesPanel SeriesPanel::from_series(std::span<const DailySeries> series) {
    if (series.empty()) {
        throw Error(Errc::MisalignedSeries, "no series to align");
    }
    const auto& ref = series.front();
    if (ref.points.empty()) {
        throw Error(Errc::EmptySeries, "keyword '" + ref.keyword + "' has no points");
    }
    SeriesPanel panel;
    panel.start = ref.points.front().date;
    panel.scale = ref.scale;
    panel.values.resize(static_cast<Eigen::Index>(ref.size()), static_cast<Eigen::Index>(series.size()));

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        if (s.size() != ref.size() || s.scale != ref.scale) {
            throw Error(Errc::MisalignedSeries, "keyword '" + s.keyword + "' does not match the date range or "
                                                    "scale of '" + ref.keyword + "'");
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s.points[i].date != panel.start + static_cast<std::int64_t>(i)) {
                throw Error(Errc::MisalignedSeries, "keyword '" + s.keyword + "' has date " +
                                                        s.points[i].date.to_string() + " where " +
                                                        (panel.start + static_cast<std::int64_t>(i)).to_string() +
                                                        " was expected");
            }
            panel.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = s.points[i].value;
        }
        panel.keywords.push_back(s.keyword);
    }
    return panel;
}

Eigen::MatrixXd correlation_matrix(const Eigen::Ref<const Eigen::MatrixXd>& window) {
    const Eigen::Index k = window.cols();
    std::vector<Eigen::MatrixXd> centered;
    std::vector<double> dvar;
    centered.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index c = 0; c < k; ++c) {
        if (!window.col(c).allFinite()) {
            throw Error(Errc::NonFiniteInput, "column " + std::to_string(c) + " contains NaN or infinity");
        }
        centered.push_back(double_centered_distances(window.col(c)));
        dvar.push_back(distance_variance_sq(centered.back()));
    }
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            r(i, j) = distance_correlation_centered(centered[ui], centered[uj], dvar[ui], dvar[uj]);
            r(j, i) = r(i, j);
        }
    }
    return r;
}

std::vector<CorrelationFrame> rolling_correlation(const SeriesPanel& panel, int window_days, unsigned threads) {
    if (window_days < 2) {
        throw Error(Errc::InvalidArgument, "window must be at least 2 days, got " + std::to_string(window_days));
    }
    const auto window = static_cast<std::size_t>(window_days);
    if (window > panel.days()) {
        throw Error(Errc::WindowTooLong, "window of " + std::to_string(window_days) + " days exceeds the " +
                                             std::to_string(panel.days()) + "-day series");
    }
    const std::size_t count = panel.days() - window + 1;
    std::vector<CorrelationFrame> frames(count);
    parallel_for(
        count,
        [&](std::size_t i) {
            auto& f = frames[i];
            f.label_date = panel.start + static_cast<std::int64_t>(i + window);
            f.window_days = window_days;
            f.matrix = correlation_matrix(panel.values.middleRows(static_cast<Eigen::Index>(i), window_days));
        },
        threads == 0 ? default_thread_count() : threads);
    return frames;
}

std::string emit_correlations_csv(std::span<const CorrelationFrame> frames, const std::vector<std::string>& keywords) {
    std::string out = "label_date,keyword_a,keyword_b,dcor\n";
    for (const auto& f : frames) {
        const auto date = f.label_date.to_string();
        for (Eigen::Index i = 0; i < f.matrix.rows(); ++i) {
            for (Eigen::Index j = i + 1; j < f.matrix.cols(); ++j) {
                out += date;
                out += ',';
                out += csv::quote(keywords[static_cast<std::size_t>(i)]);
                out += ',';
                out += csv::quote(keywords[static_cast<std::size_t>(j)]);
                out += ',';
                out += csv::format_sig(f.matrix(i, j), 12);
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace trendnet
