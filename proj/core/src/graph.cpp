#include "selcon/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

#include "selcon/errors.hpp"

namespace selcon {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(VertexId first, VertexId last) {
    std::vector<VertexId> ids;
    ids.reserve(last > first ? last - first : 0);
    for (VertexId v = first; v < last; ++v) {
        ids.push_back(v);
    }
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

std::optional<std::size_t> VertexSet::index_of(VertexId v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - members_.begin());
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    std::vector<VertexId> out;
    out.reserve(size() + other.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    std::vector<VertexId> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::string Graph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != vertex_count()) {
        throw InputError("label count " + std::to_string(labels.size()) +
                         " does not match vertex count " + std::to_string(vertex_count()));
    }
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count) {
    Graph g;
    g.adjacency_.resize(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= vertex_count || v >= vertex_count) {
            throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") has an id outside [0, " +
                             std::to_string(vertex_count) + ")");
        }
        if (u == v) {
            throw InputError("edge " + std::to_string(i) + " is a self-loop on vertex " +
                             std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t twice_edges = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        twice_edges += adj.size();
    }
    g.edge_count_ = twice_edges / 2;
    return g;
}

VertexSet InducedSubgraph::parent_ids(const VertexSet& local) const {
    std::vector<VertexId> ids;
    ids.reserve(local.size());
    for (VertexId v : local) {
        ids.push_back(to_parent[v]);
    }
    return VertexSet(std::move(ids));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s, "induced subgraph vertex set");
    const std::size_t n = s.size();
    constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> to_local(g.vertex_count(), kAbsent);
    for (std::size_t i = 0; i < n; ++i) {
        to_local[s[i]] = static_cast<VertexId>(i);
    }

    InducedSubgraph out;
    out.to_parent = s.members();
    out.graph.adjacency_.resize(n);
    std::size_t twice_edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& adj = out.graph.adjacency_[i];
        for (VertexId w : g.neighbors(s[i])) {
            if (to_local[w] != kAbsent) {
                adj.push_back(to_local[w]);
            }
        }
        // adj stays sorted: parent lists are sorted and the map is monotone.
        twice_edges += adj.size();
    }
    out.graph.edge_count_ = twice_edges / 2;
    if (g.has_labels()) {
        out.graph.labels_.reserve(n);
        for (VertexId v : s) {
            out.graph.labels_.push_back(g.labels()[v]);
        }
    }
    return out;
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
    std::vector<Distance> dist(g.vertex_count(), kUnreachable);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.vertex_count(), kNone);
    std::vector<VertexId> stack;
    std::uint32_t next = 0;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (label[root] != kNone) {
            continue;
        }
        label[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(u)) {
                if (label[w] == kNone) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    auto label = component_labels(g);
    std::uint32_t count = 0;
    for (auto c : label) {
        count = std::max(count, c + 1);
    }
    std::vector<std::vector<VertexId>> members(count);
    for (VertexId v = 0; v < label.size(); ++v) {
        members[label[v]].push_back(v);
    }
    std::vector<VertexSet> out;
    out.reserve(count);
    for (auto& m : members) {
        out.emplace_back(std::move(m));
    }
    return out;
}

void validate_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    if (!s.empty() && s.members().back() >= g.vertex_count()) {
        throw InputError(std::string(what) + " contains vertex " +
                         std::to_string(s.members().back()) + " but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

} // namespace selcon
