#include "selcon/querygen.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "selcon/edge_list.hpp"
#include "selcon/errors.hpp"

namespace selcon {
namespace {

/// First `count` entries of `pool` become a uniform sample without replacement.
template <typename T>
void partial_shuffle(std::vector<T>& pool, std::size_t count, std::mt19937_64& rng) {
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
}

} // namespace

CommunityAssignment::CommunityAssignment(std::vector<std::uint32_t> membership)
    : membership_(std::move(membership)) {
    std::vector<char> used;
    for (auto c : membership_) {
        if (c >= used.size()) {
            used.resize(std::size_t{c} + 1, 0);
        }
        used[c] = 1;
    }
    for (std::size_t c = 0; c < used.size(); ++c) {
        if (!used[c]) {
            throw InputError("community ids are not dense: id " + std::to_string(c) + " is unused");
        }
    }
    community_count_ = used.size();
}

std::vector<std::vector<VertexId>> CommunityAssignment::groups() const {
    std::vector<std::vector<VertexId>> out(community_count_);
    for (VertexId v = 0; v < membership_.size(); ++v) {
        out[membership_[v]].push_back(v);
    }
    return out;
}

CommunityAssignment read_communities(std::istream& in, const Graph& g) {
    const VertexResolver resolver(g);
    constexpr long long kUnset = -1;
    std::vector<long long> raw(g.vertex_count(), kUnset);
    std::string line;
    for (std::size_t line_number = 1; std::getline(in, line); ++line_number) {
        std::istringstream tokens(line);
        std::string vertex;
        if (!(tokens >> vertex) || vertex.front() == '#') {
            continue;
        }
        long long community = 0;
        std::string extra;
        if (!(tokens >> community) || community < 0 || (tokens >> extra)) {
            throw InputError("line " + std::to_string(line_number) +
                             ": expected '<vertex> <non-negative community id>'");
        }
        const VertexId v = resolver.resolve(vertex);
        if (raw[v] != kUnset) {
            throw InputError("line " + std::to_string(line_number) + ": vertex '" + vertex +
                             "' assigned twice");
        }
        raw[v] = community;
    }
    std::map<long long, std::uint32_t> dense;
    for (VertexId v = 0; v < raw.size(); ++v) {
        if (raw[v] == kUnset) {
            throw InputError("vertex '" + g.label(v) + "' has no community");
        }
        dense.emplace(raw[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [_, id] : dense) {
        id = next++;
    }
    std::vector<std::uint32_t> membership(raw.size());
    for (VertexId v = 0; v < raw.size(); ++v) {
        membership[v] = dense.at(raw[v]);
    }
    return CommunityAssignment(std::move(membership));
}

void write_communities(std::ostream& out, const Graph& g, const CommunityAssignment& c) {
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        out << g.label(v) << ' ' << c.community_of(v) << '\n';
    }
}

void QueryParams::validate() const {
    if (n + m == 0) {
        throw InputError("query parameters select no vertices (n + m = 0)");
    }
    if (m > 0 && (k < 1 || k > m)) {
        throw InputError("query parameter k = " + std::to_string(k) + " must lie in [1, m = " +
                         std::to_string(m) + "]");
    }
}

VertexSet generate_query(const Graph& g, const CommunityAssignment& communities,
                         const QueryParams& params) {
    params.validate();
    if (communities.vertex_count() != g.vertex_count()) {
        throw InputError("community assignment covers " + std::to_string(communities.vertex_count()) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    const auto groups = communities.groups();
    const std::size_t others_needed = params.m > 0 ? params.k : 0;
    const std::size_t per_other = others_needed > 0 ? (params.m + params.k - 1) / params.k : 0;

    auto eligible_others = [&](std::size_t home) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < groups.size(); ++c) {
            if (c != home && groups[c].size() >= per_other) {
                out.push_back(c);
            }
        }
        return out;
    };

    std::vector<std::uint32_t> homes;
    for (std::uint32_t c = 0; c < groups.size(); ++c) {
        if (groups[c].size() >= params.n && eligible_others(c).size() >= others_needed) {
            homes.push_back(c);
        }
    }
    if (homes.empty()) {
        throw InputError("infeasible query parameters: need a community with >= " +
                         std::to_string(params.n) + " vertices and " +
                         std::to_string(others_needed) + " other communities with >= " +
                         std::to_string(per_other) + " vertices each");
    }

    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> pick_home(0, homes.size() - 1);
    const std::uint32_t home = homes[pick_home(rng)];

    std::vector<VertexId> chosen;
    auto sample_from = [&](std::uint32_t community, std::size_t count) {
        auto pool = groups[community];
        partial_shuffle(pool, count, rng);
        chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<long>(count));
    };
    sample_from(home, params.n);

    if (others_needed > 0) {
        auto others = eligible_others(home);
        partial_shuffle(others, others_needed, rng);
        for (std::size_t i = 0; i < others_needed; ++i) {
            const std::size_t quota = params.m / params.k + (i < params.m % params.k ? 1 : 0);
            sample_from(others[i], quota);
        }
    }
    return VertexSet(std::move(chosen));
}

PlantedPartition planted_partition(std::size_t communities, std::size_t size, double p_in,
                                   double p_out, std::uint64_t seed) {
    if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0)) {
        throw InputError("planted partition needs 0 <= p_out <= p_in <= 1");
    }
    if (communities == 0 || size == 0) {
        throw InputError("planted partition needs at least one community of at least one vertex");
    }
    const std::size_t n = communities * size;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    std::vector<std::uint32_t> membership(n);
    for (VertexId u = 0; u < n; ++u) {
        membership[u] = static_cast<std::uint32_t>(u / size);
        for (VertexId v = u + 1; v < n; ++v) {
            const double p = (u / size == v / size) ? p_in : p_out;
            if (coin(rng) < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return {build_graph(edges, n), CommunityAssignment(std::move(membership))};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    // splitmix64 finalizer over base + counter * golden gamma
    std::uint64_t z = base + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace selcon
