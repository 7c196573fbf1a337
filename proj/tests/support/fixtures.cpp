#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace trendnet::testkit {

namespace fs = std::filesystem;

namespace {

std::string export_value(double v) {
    if (v > 0.0 && v < 1.0) return "<1";
    return std::to_string(static_cast<long>(std::lround(v)));
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TruthPanel block_truth(const BlockModel& model, const std::vector<std::string>& keywords, Date start,
                       std::size_t days) {
    std::mt19937_64 rng(model.seed);
    std::bernoulli_distribution burst(model.burst_prob);
    std::normal_distribution<double> noise(0.0, model.noise_sd);

    std::vector<std::vector<double>> latent(model.blocks, std::vector<double>(days));
    for (auto& block : latent)
        for (auto& v : block) v = burst(rng) ? 1.0 : 0.0;

    TruthPanel truth{start, keywords, {}};
    for (std::size_t k = 0; k < keywords.size(); ++k) {
        const auto& l = latent[(k / model.per_block) % model.blocks];
        std::vector<double> series(days);
        for (std::size_t t = 0; t < days; ++t) {
            series[t] = std::max(1.0, model.base + model.amplitude * l[t] + noise(rng));
        }
        truth.values.push_back(std::move(series));
    }
    return truth;
}

Date sunday_on_or_before(Date d) {
    const std::chrono::weekday wd{d.sys_days()};
    return d - static_cast<std::int64_t>(wd.c_encoding());
}

DateRange truth_span_for(DateRange span) {
    const Date first = sunday_on_or_before(span.first);
    const Date last_week = sunday_on_or_before(span.last);
    return {first, last_week + 6};
}

TrendsTree write_trends_tree(const fs::path& root, const TruthPanel& truth, DateRange span, int segment_days) {
    TrendsTree tree{root, root / "daily", root / "weekly", root / "registry.csv"};
    fs::create_directories(tree.daily_dir);
    fs::create_directories(tree.weekly_dir);

    const auto defaults = KeywordRegistry::defaults();
    std::string registry = "keyword,category\n";
    for (std::size_t k = 0; k < truth.keywords.size(); ++k) {
        const auto& kw = truth.keywords[k];
        Category cat = static_cast<Category>(k % 5);
        if (const auto idx = defaults.index_of(kw)) cat = defaults.entries()[*idx].category;
        registry += kw + "," + std::string(category_token(cat)) + "\n";

        const fs::path kdir = tree.daily_dir / kw;
        fs::create_directories(kdir);
        int n = 1;
        for (Date a = span.first; a <= span.last; a += segment_days, ++n) {
            const Date b = std::min(a + (segment_days - 1), span.last);
            double peak = 0.0;
            for (Date d = a; d <= b; d += 1) peak = std::max(peak, truth.at(k, d));
            std::ostringstream csv;
            csv << "Category: All categories\n\nDay," << kw << ": (Metro Manila)\n";
            for (Date d = a; d <= b; d += 1) {
                csv << d.to_string() << "," << export_value(truth.at(k, d) / peak * 100.0) << "\n";
            }
            write(kdir / (std::to_string(n) + ".csv"), csv.str());
        }

        const DateRange weeks = truth_span_for(span);
        std::vector<std::pair<Date, double>> weekly;
        for (Date w = weeks.first; w <= weeks.last; w += 7) {
            double sum = 0.0;
            for (int i = 0; i < 7; ++i) sum += truth.at(k, w + i);
            weekly.emplace_back(w, sum / 7.0);
        }
        double peak = 0.0;
        for (const auto& [w, v] : weekly) peak = std::max(peak, v);
        std::ostringstream csv;
        csv << "Category: All categories\n\nWeek," << kw << ": (Metro Manila)\n";
        for (const auto& [w, v] : weekly) csv << w.to_string() << "," << export_value(v / peak * 100.0) << "\n";
        write(tree.weekly_dir / (kw + ".csv"), csv.str());
    }
    write(tree.registry, registry);
    return tree;
}

fs::path fresh_temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("trendnet_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> fixture_keywords(std::size_t count) {
    if (count == 15) return KeywordRegistry::defaults().keywords();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back("kw" + std::to_string(i));
    return out;
}

}  // namespace trendnet::testkit
