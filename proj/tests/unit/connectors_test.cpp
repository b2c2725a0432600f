#include <gtest/gtest.h>

#include "oracles.hpp"
#include "selcon/connectors.hpp"
#include "selcon/errors.hpp"
#include "selcon/metrics.hpp"

using namespace selcon;

namespace {

bool connected_superset(const Graph& g, const VertexSet& q, const VertexSet& s) {
    return q.is_subset_of(s) && connected_components(induced_subgraph(g, s).graph).size() == 1;
}

/// Largest minimum degree over connected supersets of Q (tiny graphs only).
std::size_t best_min_degree(const Graph& g, const VertexSet& q) {
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!q.contains(v)) {
            rest.push_back(v);
        }
    }
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
        std::vector<VertexId> s = q.members();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if ((mask >> i) & 1U) {
                s.push_back(rest[i]);
            }
        }
        VertexSet set(s);
        if (!connected_superset(g, q, set)) {
            continue;
        }
        auto sub = induced_subgraph(g, set).graph;
        std::size_t md = sub.vertex_count() == 1 ? 0 : sub.vertex_count();
        for (VertexId v = 0; v < sub.vertex_count() && sub.vertex_count() > 1; ++v) {
            md = std::min(md, sub.degree(v));
        }
        best = std::max(best, md);
    }
    return best;
}

std::size_t min_degree(const Graph& g, const VertexSet& s) {
    auto sub = induced_subgraph(g, s).graph;
    if (sub.vertex_count() < 2) {
        return 0;
    }
    std::size_t md = sub.vertex_count();
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        md = std::min(md, sub.degree(v));
    }
    return md;
}

} // namespace

TEST(MwcConnector, AdjacentPairIsItsOwnConnector) {
    auto g = oracle::path(4);
    EXPECT_EQ(mwc_connector(g, VertexSet{1, 2}), (VertexSet{1, 2}));
}

TEST(MwcConnector, StarLeavesUseCenter) {
    auto g = oracle::star(4);
    const VertexSet q{1, 2};
    auto s = mwc_connector(g, q);
    EXPECT_EQ(s, (VertexSet{0, 1, 2}));
    EXPECT_EQ(wiener_index(induced_subgraph(g, s).graph), 4.0);
    EXPECT_EQ(oracle::min_wiener_connector(g, q), 4);
}

TEST(MwcConnector, PathEndpointsNeedWholePath) {
    auto g = oracle::path(5);
    EXPECT_EQ(mwc_connector(g, VertexSet{0, 4}), VertexSet::range(0, 5));
}

TEST(MwcConnector, EmptyQueryRejected) {
    EXPECT_THROW(mwc_connector(oracle::path(3), VertexSet{}), InputError);
}

TEST(MwcConnector, MultiComponentQueryIsUnionOfConnectors) {
    // Two paths 0-1-2 and 3-4-5.
    auto g = build_graph({{0, 1}, {1, 2}, {3, 4}, {4, 5}}, 6);
    EXPECT_EQ(mwc_connector(g, VertexSet{0, 2, 3, 5}), VertexSet::range(0, 6));
    EXPECT_EQ(mwc_connector(g, VertexSet{0, 2, 4}), (VertexSet{0, 1, 2, 4}));
}

TEST(MwcConnector, ConnectedSupersetAndNearOptimalWiener) {
    std::mt19937_64 rng(11);
    int optimal = 0;
    int trials = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = oracle::gnp(13, 0.25, seed);
        auto comps = connected_components(g);
        const auto& big = *std::max_element(comps.begin(), comps.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
        if (big.size() < 6) {
            continue;
        }
        std::vector<VertexId> pool = big.members();
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet q(std::vector<VertexId>(pool.begin(), pool.begin() + 3));
        auto s = mwc_connector(g, q);
        ASSERT_TRUE(connected_superset(g, q, s));
        const auto w = static_cast<long long>(wiener_index(induced_subgraph(g, s).graph));
        const auto best = oracle::min_wiener_connector(g, q);
        ASSERT_GE(w, best);
        EXPECT_LE(static_cast<double>(w), 1.5 * static_cast<double>(best));
        optimal += (w == best) ? 1 : 0;
        ++trials;
    }
    ASSERT_GT(trials, 20);
    EXPECT_GE(static_cast<double>(optimal), 0.8 * trials);
}

TEST(CtpConnector, WholeCliqueQuery) {
    auto g = oracle::clique(4);
    EXPECT_EQ(ctp_connector(g, VertexSet::range(0, 4)), VertexSet::range(0, 4));
}

TEST(CtpConnector, PendantPeeledFirst) {
    auto edges = oracle::clique(4).edges();
    edges.emplace_back(0, 4);
    auto g = build_graph(edges, 5);
    const VertexSet q{1, 2};
    auto s = ctp_connector(g, q);
    EXPECT_EQ(s, VertexSet::range(0, 4));
    EXPECT_EQ(min_degree(g, s), best_min_degree(g, q));
}

TEST(CtpConnector, PathCannotBePeeled) {
    EXPECT_EQ(ctp_connector(oracle::path(3), VertexSet{0, 2}), VertexSet::range(0, 3));
}

TEST(CtpConnector, EmptyQueryRejected) {
    EXPECT_THROW(ctp_connector(oracle::path(3), VertexSet{}), InputError);
}

TEST(CtpConnector, ConnectedAndMatchesBestMinDegree) {
    std::mt19937_64 rng(5);
    int matched = 0;
    int trials = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = oracle::gnp(12, 0.35, 500 + seed);
        auto comps = connected_components(g);
        if (comps.size() != 1) {
            continue;
        }
        std::vector<VertexId> pool = comps[0].members();
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet q(std::vector<VertexId>(pool.begin(), pool.begin() + 2));
        auto s = ctp_connector(g, q);
        ASSERT_TRUE(connected_superset(g, q, s));
        EXPECT_LE(min_degree(g, s), best_min_degree(g, q));
        matched += min_degree(g, s) == best_min_degree(g, q) ? 1 : 0;
        ++trials;
    }
    ASSERT_GT(trials, 10);
    EXPECT_GE(static_cast<double>(matched), 0.8 * trials);
}
