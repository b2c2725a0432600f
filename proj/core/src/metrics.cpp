#include "selcon/metrics.hpp"

#include <limits>

#include "selcon/errors.hpp"

namespace selcon {

void DistanceProfile::add(Distance d, std::uint64_t count) {
    if (d >= counts_.size()) {
        counts_.resize(std::size_t{d} + 1, 0);
    }
    counts_[d] += count;
}

void DistanceProfile::add_counts(const DistanceProfile& other) {
    if (other.counts_.size() > counts_.size()) {
        counts_.resize(other.counts_.size(), 0);
    }
    for (std::size_t d = 0; d < other.counts_.size(); ++d) {
        counts_[d] += other.counts_[d];
    }
}

void DistanceProfile::subtract_counts(const DistanceProfile& other) {
    for (std::size_t d = 0; d < other.counts_.size(); ++d) {
        counts_[d] -= other.counts_[d];
    }
    trim();
}

void DistanceProfile::trim() {
    while (!counts_.empty() && counts_.back() == 0) {
        counts_.pop_back();
    }
}

std::uint64_t DistanceProfile::ordered_pairs() const noexcept {
    const std::uint64_t n = vertex_count_;
    return n == 0 ? 0 : n * (n - 1);
}

std::uint64_t DistanceProfile::reachable_pairs() const noexcept {
    std::uint64_t total = 0;
    for (auto c : counts_) {
        total += c;
    }
    return total;
}

std::uint64_t DistanceProfile::unreachable_pairs() const noexcept {
    return ordered_pairs() - reachable_pairs();
}

double DistanceProfile::inefficiency() const {
    // Each term count*(d-1)/d is one correctly rounded division of integers.
    double total = static_cast<double>(unreachable_pairs());
    for (std::size_t d = 2; d < counts_.size(); ++d) {
        if (counts_[d] != 0) {
            total += static_cast<double>(counts_[d] * (d - 1)) / static_cast<double>(d);
        }
    }
    return total;
}

double DistanceProfile::total_harmonic() const {
    double total = 0.0;
    for (std::size_t d = 1; d < counts_.size(); ++d) {
        if (counts_[d] != 0) {
            total += static_cast<double>(counts_[d]) / static_cast<double>(d);
        }
    }
    return total;
}

std::uint64_t DistanceProfile::unordered_distance_sum() const {
    std::uint64_t total = 0;
    for (std::size_t d = 1; d < counts_.size(); ++d) {
        total += counts_[d] * d;
    }
    return total / 2;
}

Distance DistanceProfile::max_distance() const {
    if (!connected()) {
        return kUnreachable;
    }
    std::size_t d = counts_.size();
    while (d > 0 && counts_[d - 1] == 0) {
        --d;
    }
    return d == 0 ? 0 : static_cast<Distance>(d - 1);
}

DistanceProfile distance_profile(const Graph& g) {
    DistanceProfile profile(g.vertex_count());
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        for (Distance d : bfs_distances(g, s)) {
            if (d != 0 && d != kUnreachable) {
                profile.add(d);
            }
        }
    }
    return profile;
}

double harmonic_centrality(const Graph& g, VertexId u) {
    double total = 0.0;
    for (Distance d : bfs_distances(g, u)) {
        if (d != 0 && d != kUnreachable) {
            total += 1.0 / static_cast<double>(d);
        }
    }
    return total;
}

std::vector<double> harmonic_centralities(const Graph& g) {
    std::vector<double> out(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        out[u] = harmonic_centrality(g, u);
    }
    return out;
}

double total_harmonic(const Graph& g) { return distance_profile(g).total_harmonic(); }

double inefficiency(const Graph& g) { return distance_profile(g).inefficiency(); }

double efficiency(const Graph& g) {
    const auto n = g.vertex_count();
    if (n < 2) {
        throw UndefinedMetricError("efficiency is undefined for graphs with fewer than 2 vertices");
    }
    return total_harmonic(g) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double wiener_index(const Graph& g) {
    auto profile = distance_profile(g);
    if (!profile.connected()) {
        return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(profile.unordered_distance_sum());
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> score(n, 0.0);
    if (n < 3) {
        return score;
    }
    std::vector<VertexId> order;
    std::vector<Distance> dist(n);
    std::vector<double> paths(n);
    std::vector<double> delta(n);
    order.reserve(n);
    for (VertexId s = 0; s < n; ++s) {
        order.clear();
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(paths.begin(), paths.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        dist[s] = 0;
        paths[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            VertexId u = order[head];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1) {
                    paths[w] += paths[u];
                }
            }
        }
        // Dependencies flow back from the farthest layer; predecessors are
        // recovered from the distance labels.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            VertexId w = *it;
            for (VertexId u : g.neighbors(w)) {
                if (dist[u] != kUnreachable && dist[u] + 1 == dist[w]) {
                    delta[u] += paths[u] / paths[w] * (1.0 + delta[w]);
                }
            }
            if (w != s) {
                score[w] += delta[w];
            }
        }
    }
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (auto& x : score) {
        x /= norm;
    }
    return score;
}

double density(const Graph& g) {
    const auto n = g.vertex_count();
    if (n < 2) {
        throw UndefinedMetricError("density is undefined for graphs with fewer than 2 vertices");
    }
    return static_cast<double>(g.edge_count()) /
           (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

Distance diameter(const Graph& g) { return distance_profile(g).max_distance(); }

} // namespace selcon
