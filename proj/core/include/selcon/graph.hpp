#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace selcon {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

/// Hop distance of an unreachable vertex. Never treated as a finite number.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

using Edge = std::pair<VertexId, VertexId>;

class Graph;
class VertexSet;
struct InducedSubgraph;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> ids);
    /// Sorts and removes duplicates.
    explicit VertexSet(std::vector<VertexId> ids);

    static VertexSet range(VertexId first, VertexId last);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(VertexId v) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexId operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<VertexId>& members() const noexcept { return members_; }

    /// Position of `v` in sorted order, if present.
    std::optional<std::size_t> index_of(VertexId v) const;

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> members_;
};

/// Immutable simple undirected unweighted graph with dense ids 0..n-1.
///
/// Neighbor lists are sorted ascending and symmetric. Optional labels map ids
/// back to the external names they were ingested under.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId u, VertexId v) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of `v`, or its decimal id when the graph is unlabeled.
    std::string label(VertexId v) const;

    std::vector<Edge> edges() const;

    /// Attaches labels (one per vertex) to a copy of this graph.
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::span<const Edge>, std::size_t);
    friend InducedSubgraph induced_subgraph(const Graph&, const VertexSet&);

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Builds the canonical graph. Duplicate edges are merged; self-loops and
/// out-of-range ids throw InputError naming the offending edge index.
Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count);

inline Graph build_graph(std::initializer_list<Edge> edges, std::size_t vertex_count) {
    return build_graph(std::span<const Edge>(edges.begin(), edges.size()), vertex_count);
}

/// G[S] with ids renumbered by the sorted order of S.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> to_parent;

    VertexSet parent_ids(const VertexSet& local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Unweighted hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component index of every vertex, consistent with connected_components().
std::vector<std::uint32_t> component_labels(const Graph& g);

/// Throws InputError unless every member of `s` is a vertex of `g`.
void validate_vertex_set(const Graph& g, const VertexSet& s, const char* what);

} // namespace selcon
