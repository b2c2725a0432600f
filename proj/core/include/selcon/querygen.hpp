#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

/// Total map vertex -> community with dense community ids 0..c-1.
class CommunityAssignment {
public:
    CommunityAssignment() = default;
    /// Throws InputError unless the ids used are exactly 0..c-1.
    explicit CommunityAssignment(std::vector<std::uint32_t> membership);

    std::size_t vertex_count() const noexcept { return membership_.size(); }
    std::size_t community_count() const noexcept { return community_count_; }
    std::uint32_t community_of(VertexId v) const { return membership_[v]; }
    const std::vector<std::uint32_t>& membership() const noexcept { return membership_; }
    /// Members of every community, each sorted ascending.
    std::vector<std::vector<VertexId>> groups() const;

private:
    std::vector<std::uint32_t> membership_;
    std::size_t community_count_ = 0;
};

/// "vertex community" per line, '#' comments. Vertices are resolved against
/// `g` (labels or ids); community ids are arbitrary integers renumbered
/// densely in ascending order. Every vertex must be assigned exactly once.
CommunityAssignment read_communities(std::istream& in, const Graph& g);
void write_communities(std::ostream& out, const Graph& g, const CommunityAssignment& c);

/// n vertices from one home community plus m vertices spread round-robin
/// over k other communities.
struct QueryParams {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;

    /// Throws InputError unless n + m >= 1 and, when m > 0, 1 <= k <= m.
    void validate() const;
};

/// Samples a query set with the exact (n, m, k) community profile: a uniformly
/// random feasible home community, k other communities drawn uniformly from
/// those holding at least ceil(m/k) vertices, and uniform sampling without
/// replacement inside each. Throws InputError when no choice is feasible.
VertexSet generate_query(const Graph& g, const CommunityAssignment& communities,
                         const QueryParams& params);

struct PlantedPartition {
    Graph graph;
    CommunityAssignment communities;
};

/// `communities` blocks of `size` consecutive vertices; each intra-block pair
/// is an edge with probability p_in, each inter-block pair with p_out.
PlantedPartition planted_partition(std::size_t communities, std::size_t size, double p_in,
                                   double p_out, std::uint64_t seed);

/// Independent stream seed for run `counter` derived from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

} // namespace selcon
