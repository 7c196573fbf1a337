#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trendnet/date.hpp"
#include "trendnet/series.hpp"

namespace trendnet {

/// Keyword series aligned on a shared date axis: one row per day, one column
/// per keyword, columns in registry order.
struct SeriesPanel {
    std::vector<std::string> keywords;
    Date start;
    Eigen::MatrixXd values;
    Scale scale = Scale::Rescaled;

    std::size_t days() const { return static_cast<std::size_t>(values.rows()); }
    std::size_t width() const { return keywords.size(); }
    DateRange span() const { return {start, start + static_cast<std::int64_t>(days()) - 1}; }

    /// Throws MisalignedSeries unless every series covers the same dates and
    /// carries the same scale.
    static SeriesPanel from_series(std::span<const DailySeries> series);
};

/// Distance-correlation matrix labelled with the day after its window.
struct CorrelationFrame {
    Date label_date;
    int window_days = 0;
    Eigen::MatrixXd matrix;
};

/// One frame per label date. The window for label date t is the
/// `window_days` days strictly before t, so the first label is
/// `start + window_days` and the last is the day after the final data day.
/// Frames are computed in parallel and returned in date order.
/// Throws WindowTooLong, or InvalidArgument for windows shorter than 2.
std::vector<CorrelationFrame> rolling_correlation(const SeriesPanel& panel, int window_days,
                                                  unsigned threads = 0);

/// Correlation matrix of a single block of rows (the window body).
Eigen::MatrixXd correlation_matrix(const Eigen::Ref<const Eigen::MatrixXd>& window);

/// Long format `label_date,keyword_a,keyword_b,dcor` over the upper triangle,
/// 12 significant digits.
std::string emit_correlations_csv(std::span<const CorrelationFrame> frames,
                                  const std::vector<std::string>& keywords);

}  // namespace trendnet
