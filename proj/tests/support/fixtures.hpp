#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trendnet/date.hpp"
#include "trendnet/ingest.hpp"

namespace trendnet::testkit {

/// Positive "true" daily interest per keyword, before any export normalisation.
struct TruthPanel {
    Date start;
    std::vector<std::string> keywords;
    std::vector<std::vector<double>> values;  // values[keyword][day]

    Date end() const { return start + static_cast<std::int64_t>(values.front().size()) - 1; }
    double at(std::size_t k, Date d) const { return values[k][static_cast<std::size_t>(d - start)]; }
};

/// Keywords split into consecutive blocks. Each block has a sparse burst
/// latent (a spike with probability `burst_prob` per day); every keyword in
/// the block is `base + amplitude * latent + noise`. Blocks are independent.
struct BlockModel {
    std::size_t blocks = 3;
    std::size_t per_block = 5;
    double burst_prob = 0.25;
    double base = 20.0;
    double amplitude = 60.0;
    double noise_sd = 6.0;
    std::uint64_t seed = 20200316;
};

TruthPanel block_truth(const BlockModel& model, const std::vector<std::string>& keywords, Date start,
                       std::size_t days);

/// Sunday on or before `d` (weekly exports start weeks on Sunday).
Date sunday_on_or_before(Date d);

/// The span a truth panel must cover so that weekly rows reach past `span`.
DateRange truth_span_for(DateRange span);

struct TrendsTree {
    std::filesystem::path root;
    std::filesystem::path daily_dir;
    std::filesystem::path weekly_dir;
    std::filesystem::path registry;
};

/// Writes export-style files: daily/<kw>/<n>.csv in `segment_days` chunks
/// normalised to a per-segment maximum of 100, weekly/<kw>.csv normalised
/// over the whole year, and registry.csv. Values are rounded to integers and
/// small positives become `<1`, as in real exports.
TrendsTree write_trends_tree(const std::filesystem::path& root, const TruthPanel& truth, DateRange span,
                             int segment_days = 31);

/// Fresh empty directory under the system temp dir.
std::filesystem::path fresh_temp_dir(const std::string& name);

std::string read_text(const std::filesystem::path& p);

/// Keyword names: the default registry when 15 are requested, synthetic otherwise.
std::vector<std::string> fixture_keywords(std::size_t count);

}  // namespace trendnet::testkit
