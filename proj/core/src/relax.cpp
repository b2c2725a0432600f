#include <algorithm>
#include <bit>
#include <limits>

#include "masked_subgraph.hpp"
#include "parallel.hpp"
#include "selcon/connectors.hpp"
#include "selcon/errors.hpp"
#include "selcon/metrics.hpp"

namespace selcon {
namespace {

using detail::Bits;
using detail::MaskedSubgraph;

void require_subset(const VertexSet& query, const VertexSet& seed) {
    if (!query.is_subset_of(seed)) {
        throw InputError("query set is not contained in the seed connector");
    }
}

/// Candidate solution for the exact searches: cost, then size, then the
/// lexicographic order of the added vertices (lowest differing bit wins).
struct MaskChoice {
    double cost = std::numeric_limits<double>::infinity();
    int size = std::numeric_limits<int>::max();
    std::uint64_t mask = 0;
    bool valid = false;

    bool better_than(const MaskChoice& other) const {
        if (!other.valid) {
            return valid;
        }
        if (cost != other.cost) {
            return cost < other.cost;
        }
        if (size != other.size) {
            return size < other.size;
        }
        const std::uint64_t diff = mask ^ other.mask;
        return diff != 0 && (mask & (diff & (~diff + 1))) != 0;
    }
};

template <typename Evaluate>
MaskChoice search_masks(std::size_t bits, unsigned workers, Evaluate&& evaluate) {
    const std::size_t total = std::size_t{1} << bits;
    const std::size_t chunk_count = std::max<std::size_t>(1, std::min<std::size_t>(workers, total));
    std::vector<MaskChoice> best(chunk_count);
    detail::parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        auto state = evaluate.make_state();
        for (std::size_t mask = begin; mask < end; ++mask) {
            MaskChoice c{evaluate(state, mask), std::popcount(mask), mask, true};
            if (c.better_than(best[chunk])) {
                best[chunk] = c;
            }
        }
    });
    MaskChoice winner;
    for (const auto& c : best) {
        if (c.better_than(winner)) {
            winner = c;
        }
    }
    return winner;
}

struct MaskedEvaluator {
    const MaskedSubgraph& sub;
    const Bits& base;
    const std::vector<VertexId>& candidates;

    struct State {
        MaskedSubgraph::Scratch scratch;
        Bits alive;
    };
    State make_state() const { return {sub.make_scratch(), base}; }

    double operator()(State& st, std::uint64_t mask) const {
        st.alive = base;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if ((mask >> i) & 1U) {
                st.alive.set(candidates[i]);
            }
        }
        return sub.profile(st.alive, st.scratch).inefficiency();
    }
};

struct ListEvaluator {
    const Graph& g;
    const VertexSet& query;
    const std::vector<VertexId>& candidates;

    struct State {};
    State make_state() const { return {}; }

    double operator()(State&, std::uint64_t mask) const {
        std::vector<VertexId> members = query.members();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if ((mask >> i) & 1U) {
                members.push_back(candidates[i]);
            }
        }
        return distance_profile(induced_subgraph(g, VertexSet(std::move(members))).graph)
            .inefficiency();
    }
};

VertexSet with_mask(const VertexSet& query, const std::vector<VertexId>& candidates,
                    std::uint64_t mask) {
    std::vector<VertexId> members = query.members();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((mask >> i) & 1U) {
            members.push_back(candidates[i]);
        }
    }
    return VertexSet(std::move(members));
}

} // namespace

RelaxResult greedy_relax(const Graph& g, const VertexSet& seed, const VertexSet& query,
                         const RelaxOptions& options) {
    validate_vertex_set(g, seed, "seed connector");
    require_subset(query, seed);

    const auto sub = induced_subgraph(g, seed);
    const MaskedSubgraph masked(sub.graph);
    Bits is_query = masked.empty_set();
    for (VertexId q : query) {
        is_query.set(*seed.index_of(q));
    }
    Bits alive = masked.full_set();
    auto scratch = masked.make_scratch();

    RelaxTrace trace;
    trace.steps.push_back({std::nullopt, masked.profile(alive, scratch).inefficiency(), seed.size()});

    const unsigned workers = std::max(1U, options.workers);
    std::vector<MaskedSubgraph::Scratch> scratches;
    for (unsigned w = 0; w < workers; ++w) {
        scratches.push_back(masked.make_scratch());
    }

    std::vector<VertexId> candidates;
    std::vector<double> costs;
    while (true) {
        candidates.clear();
        for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
            if (!is_query.test(v)) {
                candidates.push_back(static_cast<VertexId>(v));
            }
        }
        if (candidates.empty()) {
            break;
        }
        costs.assign(candidates.size(), 0.0);

        // Per-component profiles; a candidate re-evaluates only its own component.
        std::vector<Bits> components;
        std::vector<DistanceProfile> component_profiles;
        std::vector<std::size_t> component_of(masked.size(), 0);
        DistanceProfile whole(alive.count());
        if (options.localized) {
            components = masked.components(alive, scratch);
            for (std::size_t c = 0; c < components.size(); ++c) {
                component_profiles.push_back(masked.profile(components[c], scratch));
                whole.add_counts(component_profiles.back());
                for (auto v = components[c].find_first(); v != Bits::npos;
                     v = components[c].find_next(v)) {
                    component_of[v] = c;
                }
            }
        }

        detail::parallel_chunks(candidates.size(), workers,
                                [&](std::size_t begin, std::size_t end, std::size_t chunk) {
            auto& local = scratches[chunk];
            Bits reduced;
            for (std::size_t i = begin; i < end; ++i) {
                const VertexId u = candidates[i];
                if (options.localized) {
                    const auto c = component_of[u];
                    reduced = components[c];
                    reduced.reset(u);
                    DistanceProfile p = whole;
                    p.subtract_counts(component_profiles[c]);
                    p.add_counts(masked.profile(reduced, local));
                    p.set_vertex_count(whole.vertex_count() - 1);
                    costs[i] = p.inefficiency();
                } else {
                    reduced = alive;
                    reduced.reset(u);
                    costs[i] = masked.profile(reduced, local).inefficiency();
                }
            }
        });

        std::size_t pick = 0;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            if (costs[i] < costs[pick]) {
                pick = i;
            }
        }
        alive.reset(candidates[pick]);
        trace.steps.push_back({sub.to_parent[candidates[pick]], costs[pick], alive.count()});
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j < trace.steps.size(); ++j) {
        const auto& s = trace.steps[j];
        const auto& b = trace.steps[best];
        if (s.inefficiency < b.inefficiency ||
            (s.inefficiency == b.inefficiency && s.solution_size < b.solution_size)) {
            best = j;
        }
    }
    trace.best_index = best;

    std::vector<VertexId> removed;
    for (std::size_t j = 1; j <= best; ++j) {
        removed.push_back(*trace.steps[j].removed);
    }
    return {seed.set_difference(VertexSet(std::move(removed))), std::move(trace)};
}

RelaxResult gra_mis(const Graph& g, const VertexSet& query, const RelaxOptions& options) {
    return greedy_relax(g, mwc_connector(g, query), query, options);
}

VertexSet exhaustive_relax(const Graph& g, const VertexSet& seed, const VertexSet& query,
                           const ExactSearchOptions& options) {
    validate_vertex_set(g, seed, "seed connector");
    require_subset(query, seed);
    const auto extra = seed.set_difference(query);
    const std::size_t cap = std::min<std::size_t>(options.cap, 63);
    if (extra.size() > cap) {
        throw CapExceededError("exhaustive relaxation refused: non-query seed vertices",
                               extra.size(), options.cap);
    }

    const auto sub = induced_subgraph(g, seed);
    const MaskedSubgraph masked(sub.graph);
    Bits base = masked.empty_set();
    for (VertexId q : query) {
        base.set(*seed.index_of(q));
    }
    std::vector<VertexId> local_candidates;
    for (VertexId v : extra) {
        local_candidates.push_back(static_cast<VertexId>(*seed.index_of(v)));
    }
    const auto winner = search_masks(extra.size(), std::max(1U, options.workers),
                                     MaskedEvaluator{masked, base, local_candidates});
    return with_mask(query, extra.members(), winner.mask);
}

VertexSet brute_force_mis(const Graph& g, const VertexSet& query,
                          const ExactSearchOptions& options) {
    validate_vertex_set(g, query, "query set");
    const auto extra = VertexSet::range(0, static_cast<VertexId>(g.vertex_count())).set_difference(query);
    const std::size_t cap = std::min<std::size_t>(options.cap, 63);
    if (extra.size() > cap) {
        throw CapExceededError("brute-force search refused: non-query vertices", extra.size(),
                               options.cap);
    }
    const auto winner = search_masks(extra.size(), std::max(1U, options.workers),
                                     ListEvaluator{g, query, extra.members()});
    return with_mask(query, extra.members(), winner.mask);
}

} // namespace selcon
