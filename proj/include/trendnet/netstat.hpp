#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trendnet/correlate.hpp"
#include "trendnet/date.hpp"

namespace trendnet {

using Adjacency = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Undirected keyword graph at one label date and threshold.
struct GraphFrame {
    Date label_date;
    double threshold = 0.0;
    Adjacency adjacency;
};

struct MetricPoint {
    Date label_date;
    int window_days = 0;
    double threshold = 0.0;
    long edge_count = 0;
    double density = 0.0;
    double clustering_global = 0.0;
    double clustering_avg_local = 0.0;

    bool operator==(const MetricPoint&) const = default;
};

/// Edge (i, j) iff corr(i, j) >= theta for i != j. Diagonal is always 0.
/// Throws ThetaOutOfRange unless 0 < theta < 1.
Adjacency threshold_matrix(const Eigen::Ref<const Eigen::MatrixXd>& corr, double theta);
GraphFrame threshold_adjacency(const CorrelationFrame& frame, double theta);

long edge_count(const Adjacency& adj);

/// 2E / (K(K-1)). Throws InvalidArgument for K < 2.
double network_density(const Adjacency& adj);
inline double network_density(const GraphFrame& g) { return network_density(g.adjacency); }

/// Per-vertex triangle count (lambda) and connected-triple count (tau = deg choose 2).
struct VertexTriads {
    std::vector<long> triangles;
    std::vector<long> triples;
};

VertexTriads vertex_triads(const Adjacency& adj);

/// Sum of triangles over sum of triples across vertices; 0 when there are no triples.
double clustering_global(const Adjacency& adj);
inline double clustering_global(const GraphFrame& g) { return clustering_global(g.adjacency); }

/// Mean of per-vertex lambda/tau, with vertices of degree < 2 contributing 0.
double clustering_avg_local(const Adjacency& adj);
inline double clustering_avg_local(const GraphFrame& g) { return clustering_avg_local(g.adjacency); }

MetricPoint compute_metrics(const GraphFrame& g, int window_days);

/// Keyword pair or triple with the number of frames in which it was
/// connected (pair) or closed (triple).
struct PersistenceEntry {
    std::vector<std::string> members;
    long count = 0;

    bool operator==(const PersistenceEntry&) const = default;
};

/// Counts frames with label date inside `period` that contain each edge.
/// Sorted by descending count, then lexicographically by members. Entries
/// with a zero count are dropped unless `exhaustive` is set.
/// Throws EmptyPeriod when no frame falls inside `period`.
std::vector<PersistenceEntry> pair_persistence(std::span<const GraphFrame> frames, DateRange period,
                                               const std::vector<std::string>& keywords, bool exhaustive = false);

/// As pair_persistence, over triangles (all three edges present).
std::vector<PersistenceEntry> triad_persistence(std::span<const GraphFrame> frames, DateRange period,
                                                const std::vector<std::string>& keywords, bool exhaustive = false);

}  // namespace trendnet
