#pragma once

#include <cstdint>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

/// Histogram of hop distances over ordered vertex pairs (u, v), u != v.
///
/// Every scalar distance measure in this library is a function of this
/// histogram. Counts are exact integers, so profiles can be combined
/// (added, subtracted) per component without rounding, and any two routes
/// producing the same histogram produce bit-identical metric values.
class DistanceProfile {
public:
    DistanceProfile() = default;
    explicit DistanceProfile(std::size_t vertex_count) : vertex_count_(vertex_count) {}

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    void set_vertex_count(std::size_t n) noexcept { vertex_count_ = n; }

    /// Records `count` ordered pairs at finite distance `d` >= 1.
    void add(Distance d, std::uint64_t count = 1);
    /// Adds / removes the finite-distance counts of `other` (vertex count untouched).
    void add_counts(const DistanceProfile& other);
    void subtract_counts(const DistanceProfile& other);

    /// counts()[d] is the number of ordered pairs at distance d; index 0 unused.
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

    std::uint64_t ordered_pairs() const noexcept;
    std::uint64_t reachable_pairs() const noexcept;
    std::uint64_t unreachable_pairs() const noexcept;

    /// Sum over ordered pairs of (1 - 1/d), with 1/inf = 0.
    double inefficiency() const;
    /// Sum over ordered pairs of 1/d.
    double total_harmonic() const;
    /// Sum over unordered pairs of d; only meaningful when connected().
    std::uint64_t unordered_distance_sum() const;
    bool connected() const noexcept { return unreachable_pairs() == 0; }
    /// Largest finite distance, or kUnreachable when some pair is disconnected.
    Distance max_distance() const;

    friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;

private:
    void trim();

    std::size_t vertex_count_ = 0;
    std::vector<std::uint64_t> counts_;
};

DistanceProfile distance_profile(const Graph& g);

/// Sum of 1/d(v, u) over v != u.
double harmonic_centrality(const Graph& g, VertexId u);
std::vector<double> harmonic_centralities(const Graph& g);
double total_harmonic(const Graph& g);

/// Network inefficiency over ordered pairs; equals n(n-1) - total_harmonic(g).
double inefficiency(const Graph& g);

/// total_harmonic / (n(n-1)). Throws UndefinedMetricError when n < 2.
double efficiency(const Graph& g);

/// Sum of pairwise distances; +infinity when g is disconnected.
double wiener_index(const Graph& g);

/// Exact shortest-path betweenness normalized by (n-1)(n-2), endpoints excluded.
std::vector<double> betweenness(const Graph& g);

/// |E| / (n(n-1)/2). Throws UndefinedMetricError when n < 2.
double density(const Graph& g);

/// Largest finite distance, or kUnreachable when g is disconnected.
Distance diameter(const Graph& g);

} // namespace selcon
