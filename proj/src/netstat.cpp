#include "trendnet/netstat.hpp"

#include <algorithm>
#include <numeric>

#include "trendnet/error.hpp"

namespace trendnet {

namespace {

constexpr std::int64_t kMaxExactInteger = std::int64_t{1} << 53;

// Running sum of fractions kept exact while numerator and denominator stay
// below 2^53, so the final quotient is rounded once. Falls back to extended
// precision accumulation on overflow.
class FractionSum {
public:
    void add(std::int64_t p, std::int64_t q) {
        approx_ += static_cast<long double>(p) / static_cast<long double>(q);
        if (!exact_ || p == 0) return;
        const std::int64_t g = std::gcd(den_, q);
        std::int64_t lcm = 0, lhs = 0, rhs = 0, sum = 0;
        if (__builtin_mul_overflow(den_ / g, q, &lcm) || __builtin_mul_overflow(num_, lcm / den_, &lhs) ||
            __builtin_mul_overflow(p, lcm / q, &rhs) || __builtin_add_overflow(lhs, rhs, &sum)) {
            exact_ = false;
            return;
        }
        const std::int64_t r = std::gcd(sum, lcm);
        num_ = sum / r;
        den_ = lcm / r;
    }

    double divided_by(std::int64_t k) const {
        std::int64_t den = 0;
        if (exact_ && !__builtin_mul_overflow(den_, k, &den) && den < kMaxExactInteger && num_ < kMaxExactInteger) {
            return static_cast<double>(num_) / static_cast<double>(den);
        }
        return static_cast<double>(approx_ / static_cast<long double>(k));
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    long double approx_ = 0.0L;
    bool exact_ = true;
};

std::vector<std::size_t> frames_in_period(std::span<const GraphFrame> frames, DateRange period) {
    std::vector<std::size_t> idx;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        if (period.contains(frames[f].label_date)) idx.push_back(f);
    }
    if (idx.empty()) {
        throw Error(Errc::EmptyPeriod, "no frames between " + period.first.to_string() + " and " +
                                           period.last.to_string());
    }
    return idx;
}

void sort_report(std::vector<PersistenceEntry>& entries) {
    std::ranges::sort(entries, [](const PersistenceEntry& a, const PersistenceEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.members < b.members;
    });
}

void check_width(std::span<const GraphFrame> frames, const std::vector<std::string>& keywords) {
    for (const auto& f : frames) {
        if (static_cast<std::size_t>(f.adjacency.rows()) != keywords.size()) {
            throw Error(Errc::InvalidArgument, "frame " + f.label_date.to_string() + " has " +
                                                   std::to_string(f.adjacency.rows()) + " vertices but " +
                                                   std::to_string(keywords.size()) + " keywords were given");
        }
    }
}

}  // namespace

Adjacency threshold_matrix(const Eigen::Ref<const Eigen::MatrixXd>& corr, double theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw Error(Errc::ThetaOutOfRange, "threshold must lie in (0, 1), got " + std::to_string(theta));
    }
    Adjacency adj = (corr.array() >= theta).cast<std::uint8_t>();
    adj.diagonal().setZero();
    return adj;
}

GraphFrame threshold_adjacency(const CorrelationFrame& frame, double theta) {
    return {frame.label_date, theta, threshold_matrix(frame.matrix, theta)};
}

long edge_count(const Adjacency& adj) {
    long e = 0;
    for (Eigen::Index i = 0; i < adj.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < adj.cols(); ++j) {
            e += adj(i, j) != 0;
        }
    }
    return e;
}

double network_density(const Adjacency& adj) {
    const long k = static_cast<long>(adj.rows());
    if (k < 2) {
        throw Error(Errc::InvalidArgument, "density needs at least 2 vertices");
    }
    return static_cast<double>(2 * edge_count(adj)) / static_cast<double>(k * (k - 1));
}

VertexTriads vertex_triads(const Adjacency& adj) {
    const Eigen::Index k = adj.rows();
    VertexTriads t{std::vector<long>(static_cast<std::size_t>(k), 0), std::vector<long>(static_cast<std::size_t>(k), 0)};
    for (Eigen::Index v = 0; v < k; ++v) {
        long degree = 0;
        long closed = 0;
        for (Eigen::Index u = 0; u < k; ++u) {
            if (u == v || !adj(v, u)) continue;
            ++degree;
            for (Eigen::Index w = u + 1; w < k; ++w) {
                if (w != v && adj(v, w) && adj(u, w)) ++closed;
            }
        }
        t.triangles[static_cast<std::size_t>(v)] = closed;
        t.triples[static_cast<std::size_t>(v)] = degree * (degree - 1) / 2;
    }
    return t;
}

double clustering_global(const Adjacency& adj) {
    const auto t = vertex_triads(adj);
    const long closed = std::accumulate(t.triangles.begin(), t.triangles.end(), 0L);
    const long triples = std::accumulate(t.triples.begin(), t.triples.end(), 0L);
    return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

double clustering_avg_local(const Adjacency& adj) {
    if (adj.rows() == 0) return 0.0;
    const auto t = vertex_triads(adj);
    FractionSum sum;
    for (std::size_t v = 0; v < t.triangles.size(); ++v) {
        if (t.triples[v] > 0) sum.add(t.triangles[v], t.triples[v]);
    }
    return sum.divided_by(adj.rows());
}

MetricPoint compute_metrics(const GraphFrame& g, int window_days) {
    return {
        .label_date = g.label_date,
        .window_days = window_days,
        .threshold = g.threshold,
        .edge_count = edge_count(g.adjacency),
        .density = network_density(g.adjacency),
        .clustering_global = clustering_global(g.adjacency),
        .clustering_avg_local = clustering_avg_local(g.adjacency),
    };
}

std::vector<PersistenceEntry> pair_persistence(std::span<const GraphFrame> frames, DateRange period,
                                               const std::vector<std::string>& keywords, bool exhaustive) {
    check_width(frames, keywords);
    const auto idx = frames_in_period(frames, period);
    const auto k = static_cast<Eigen::Index>(keywords.size());
    std::vector<PersistenceEntry> out;
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            long count = 0;
            for (auto f : idx) count += frames[f].adjacency(i, j) != 0;
            if (count > 0 || exhaustive) {
                out.push_back({{keywords[static_cast<std::size_t>(i)], keywords[static_cast<std::size_t>(j)]}, count});
            }
        }
    }
    sort_report(out);
    return out;
}

std::vector<PersistenceEntry> triad_persistence(std::span<const GraphFrame> frames, DateRange period,
                                                const std::vector<std::string>& keywords, bool exhaustive) {
    check_width(frames, keywords);
    const auto idx = frames_in_period(frames, period);
    const auto k = static_cast<Eigen::Index>(keywords.size());
    std::vector<PersistenceEntry> out;
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            for (Eigen::Index l = j + 1; l < k; ++l) {
                long count = 0;
                for (auto f : idx) {
                    const auto& a = frames[f].adjacency;
                    count += a(i, j) && a(j, l) && a(i, l);
                }
                if (count > 0 || exhaustive) {
                    out.push_back({{keywords[static_cast<std::size_t>(i)], keywords[static_cast<std::size_t>(j)],
                                    keywords[static_cast<std::size_t>(l)]},
                                   count});
                }
            }
        }
    }
    sort_report(out);
    return out;
}

}  // namespace trendnet
