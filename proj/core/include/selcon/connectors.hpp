#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

inline constexpr std::size_t kDefaultExhaustiveCap = 20;
inline constexpr std::size_t kDefaultBruteForceCap = 22;

/// One state G_j of the relaxation chain.
struct TraceStep {
    std::optional<VertexId> removed; ///< empty for the seed connector
    double inefficiency = 0.0;
    std::size_t solution_size = 0;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct RelaxTrace {
    std::vector<TraceStep> steps;
    std::size_t best_index = 0;

    friend bool operator==(const RelaxTrace&, const RelaxTrace&) = default;
};

struct RelaxResult {
    VertexSet solution;
    RelaxTrace trace;
};

struct RelaxOptions {
    /// Threads evaluating candidate removals within one step. Results do not depend on it.
    unsigned workers = 1;
    /// Re-evaluate only the component touched by a removal instead of the whole subgraph.
    bool localized = true;
};

struct ExactSearchOptions {
    std::size_t cap = kDefaultExhaustiveCap;
    unsigned workers = 1;
};

/// Connected superset of Q with small Wiener index (shortest-path-tree union
/// heuristic). Queries spread over several components of G get one connector
/// per component; the union is returned. Throws InputError on empty Q.
VertexSet mwc_connector(const Graph& g, const VertexSet& query);

/// Min-degree peeling that keeps Q connected and returns the intermediate
/// subgraph with the largest minimum degree (ties: fewer vertices).
VertexSet ctp_connector(const Graph& g, const VertexSet& query);

/// Greedy relaxation of `seed`: repeatedly drop the non-query vertex whose
/// removal gives the lowest inefficiency (ties: smallest id), and return the
/// cheapest state on the chain (ties: fewest vertices, then earliest step).
/// Throws InputError unless query is a subset of seed.
RelaxResult greedy_relax(const Graph& g, const VertexSet& seed, const VertexSet& query,
                         const RelaxOptions& options = {});

/// Greedy relaxation seeded with mwc_connector.
RelaxResult gra_mis(const Graph& g, const VertexSet& query, const RelaxOptions& options = {});

/// Optimal Q ∪ R over all R ⊆ seed \ Q (ties: fewer vertices, then
/// lexicographically smallest R). Throws CapExceededError when |seed \ Q| > cap.
VertexSet exhaustive_relax(const Graph& g, const VertexSet& seed, const VertexSet& query,
                           const ExactSearchOptions& options = {});

/// Global optimum over all supersets of Q, same tie rules as exhaustive_relax.
/// Evaluates every candidate through induced_subgraph + distance_profile,
/// independently of the bitset evaluator used by the relaxers.
/// Throws CapExceededError when |V \ Q| > cap.
VertexSet brute_force_mis(const Graph& g, const VertexSet& query,
                          const ExactSearchOptions& options = {kDefaultBruteForceCap, 1});

/// Inefficiency of G[S].
double subgraph_inefficiency(const Graph& g, const VertexSet& s);

} // namespace selcon
