#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "selcon/graph.hpp"
#include "selcon/metrics.hpp"

namespace selcon::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Dense bitset adjacency of a (small) graph, evaluated on vertex subsets.
///
/// Distances inside G[alive] come from level-synchronous BFS; each level is
/// an OR of adjacency rows.
class MaskedSubgraph {
public:
    struct Scratch {
        Bits visited;
        Bits frontier;
        Bits next;
    };

    explicit MaskedSubgraph(const Graph& g);

    std::size_t size() const noexcept { return rows_.size(); }
    Bits empty_set() const { return Bits(rows_.size()); }
    Bits full_set() const;
    Scratch make_scratch() const;

    /// Distance profile of G[alive].
    DistanceProfile profile(const Bits& alive, Scratch& scratch) const;

    /// Connected components of G[alive], ordered by smallest member.
    std::vector<Bits> components(const Bits& alive, Scratch& scratch) const;

    /// Vertices of `alive` reachable from `source` inside G[alive].
    void reach(const Bits& alive, VertexId source, Scratch& scratch, Bits& out) const;

    const Bits& row(VertexId v) const { return rows_[v]; }

private:
    std::vector<Bits> rows_;
};

} // namespace selcon::detail
