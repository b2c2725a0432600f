#include "selcon/connectors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "selcon/errors.hpp"
#include "selcon/metrics.hpp"

namespace selcon {
namespace {

/// Query vertices grouped by the connected component of G they lie in.
std::vector<VertexSet> group_by_component(const Graph& g, const VertexSet& query) {
    auto label = component_labels(g);
    std::map<std::uint32_t, std::vector<VertexId>> groups;
    for (VertexId q : query) {
        groups[label[q]].push_back(q);
    }
    std::vector<VertexSet> out;
    for (auto& [_, members] : groups) {
        out.emplace_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return out;
}

void require_query(const Graph& g, const VertexSet& query) {
    if (query.empty()) {
        throw InputError("query set is empty");
    }
    validate_vertex_set(g, query, "query set");
}

/// BFS parent of every reached vertex, choosing the smallest-id neighbor one level closer.
std::vector<VertexId> bfs_parents(const Graph& g, const std::vector<Distance>& dist) {
    std::vector<VertexId> parent(g.vertex_count(), kUnreachable);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == 0 || dist[v] == kUnreachable) {
            continue;
        }
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] + 1 == dist[v]) {
                parent[v] = w;
                break;
            }
        }
    }
    return parent;
}

VertexSet spt_union_connector(const Graph& g, const VertexSet& group) {
    if (group.size() == 1) {
        return group;
    }
    // Candidate roots: high-degree vertices within ceil(max query distance / 2) of Q.
    std::vector<Distance> nearest(g.vertex_count(), kUnreachable);
    Distance spread = 0;
    for (VertexId q : group) {
        auto dist = bfs_distances(g, q);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            nearest[v] = std::min(nearest[v], dist[v]);
        }
        for (VertexId other : group) {
            spread = std::max(spread, dist[other]);
        }
    }
    const Distance radius = (spread + 1) / 2;

    std::vector<VertexId> ball;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (nearest[v] <= radius && !group.contains(v)) {
            ball.push_back(v);
        }
    }
    const std::size_t hubs = std::min<std::size_t>(group.size() * 5, 50);
    std::sort(ball.begin(), ball.end(), [&](VertexId a, VertexId b) {
        return std::make_tuple(g.degree(b), a) < std::make_tuple(g.degree(a), b);
    });
    if (ball.size() > hubs) {
        ball.resize(hubs);
    }
    std::vector<VertexId> roots = group.members();
    roots.insert(roots.end(), ball.begin(), ball.end());
    std::sort(roots.begin(), roots.end());

    VertexSet best;
    std::uint64_t best_wiener = 0;
    for (VertexId root : roots) {
        auto dist = bfs_distances(g, root);
        auto parent = bfs_parents(g, dist);
        std::vector<VertexId> members{root};
        for (VertexId q : group) {
            for (VertexId v = q; v != root; v = parent[v]) {
                members.push_back(v);
            }
        }
        VertexSet candidate(std::move(members));
        auto sub = induced_subgraph(g, candidate);
        const auto wiener = distance_profile(sub.graph).unordered_distance_sum();
        if (best.empty() || wiener < best_wiener ||
            (wiener == best_wiener && candidate.size() < best.size())) {
            best = std::move(candidate);
            best_wiener = wiener;
        }
    }
    return best;
}

/// True when every query vertex is reachable from the first one inside `alive`,
/// skipping `removed`. `seen` receives the reached set.
bool query_connected(const Graph& g, const std::vector<char>& alive, VertexId removed,
                     const VertexSet& group, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<VertexId> stack{group[0]};
    seen[group[0]] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            if (alive[w] && w != removed && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(group.begin(), group.end(), [&](VertexId q) { return seen[q] != 0; });
}

VertexSet peel_component(const Graph& g, const VertexSet& group) {
    const std::size_t n = g.vertex_count();
    std::vector<char> alive(n, 0);
    std::vector<char> seen(n, 0);
    // Start from the whole component of the group.
    std::fill(alive.begin(), alive.end(), 1);
    query_connected(g, alive, kUnreachable, group, seen);
    alive = seen;

    std::vector<std::size_t> degree(n, 0);
    std::size_t alive_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) {
            continue;
        }
        ++alive_count;
        for (VertexId w : g.neighbors(v)) {
            degree[v] += alive[w] ? 1 : 0;
        }
    }
    auto min_degree = [&] {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (VertexId v = 0; v < n; ++v) {
            if (alive[v]) {
                best = std::min(best, degree[v]);
            }
        }
        return alive_count == 1 ? std::size_t{0} : best;
    };

    std::vector<char> best_alive = alive;
    std::size_t best_min_degree = min_degree();
    std::size_t best_size = alive_count;

    std::vector<VertexId> candidates;
    while (true) {
        candidates.clear();
        for (VertexId v = 0; v < n; ++v) {
            if (alive[v] && !group.contains(v)) {
                candidates.push_back(v);
            }
        }
        std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
            return std::make_tuple(degree[a], a) < std::make_tuple(degree[b], b);
        });
        bool removed_any = false;
        for (VertexId u : candidates) {
            if (!query_connected(g, alive, u, group, seen)) {
                continue;
            }
            // Drop u and everything it cut off from the query.
            for (VertexId v = 0; v < n; ++v) {
                if (alive[v] && !seen[v]) {
                    alive[v] = 0;
                    --alive_count;
                    for (VertexId w : g.neighbors(v)) {
                        if (alive[w]) {
                            --degree[w];
                        }
                    }
                }
            }
            removed_any = true;
            break;
        }
        if (!removed_any) {
            break;
        }
        const auto current = min_degree();
        if (current > best_min_degree || (current == best_min_degree && alive_count < best_size)) {
            best_alive = alive;
            best_min_degree = current;
            best_size = alive_count;
        }
    }

    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
        if (best_alive[v]) {
            members.push_back(v);
        }
    }
    return VertexSet(std::move(members));
}

} // namespace

VertexSet mwc_connector(const Graph& g, const VertexSet& query) {
    require_query(g, query);
    VertexSet out;
    for (const auto& group : group_by_component(g, query)) {
        out = out.set_union(spt_union_connector(g, group));
    }
    return out;
}

VertexSet ctp_connector(const Graph& g, const VertexSet& query) {
    require_query(g, query);
    VertexSet out;
    for (const auto& group : group_by_component(g, query)) {
        out = out.set_union(peel_component(g, group));
    }
    return out;
}

double subgraph_inefficiency(const Graph& g, const VertexSet& s) {
    return distance_profile(induced_subgraph(g, s).graph).inefficiency();
}

} // namespace selcon
