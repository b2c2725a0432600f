#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "selcon/edge_list.hpp"
#include "selcon/errors.hpp"
#include "selcon/querygen.hpp"

using namespace selcon;

namespace {

struct Profile {
    std::size_t home_count = 0;
    std::vector<std::size_t> others; // sorted descending
};

Profile recount(const CommunityAssignment& c, const VertexSet& q, std::size_t n) {
    std::map<std::uint32_t, std::size_t> per;
    for (VertexId v : q) {
        ++per[c.community_of(v)];
    }
    Profile p;
    std::vector<std::size_t> counts;
    for (auto [_, k] : per) {
        counts.push_back(k);
    }
    std::sort(counts.rbegin(), counts.rend());
    // The home community is the one holding exactly n; when several fit, any
    // choice leaving a round-robin remainder is acceptable.
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == n) {
            p.home_count = n;
            counts.erase(counts.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    p.others = counts;
    return p;
}

CommunityAssignment blocks(std::vector<std::size_t> sizes) {
    std::vector<std::uint32_t> m;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        m.insert(m.end(), sizes[c], static_cast<std::uint32_t>(c));
    }
    return CommunityAssignment(m);
}

} // namespace

TEST(QueryGen, HomeOnly) {
    auto pp = planted_partition(3, 8, 1.0, 0.0, 1);
    auto q = generate_query(pp.graph, pp.communities, {5, 0, 0, 11});
    ASSERT_EQ(q.size(), 5u);
    const auto home = pp.communities.community_of(q.members()[0]);
    for (VertexId v : q) {
        EXPECT_EQ(pp.communities.community_of(v), home);
    }
}

TEST(QueryGen, OutlierSetup) {
    std::vector<std::size_t> sizes{12, 12, 1, 1, 1, 1};
    auto c = blocks(sizes);
    Graph g = build_graph({}, c.vertex_count());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto q = generate_query(g, c, {10, 3, 3, seed});
        ASSERT_EQ(q.size(), 13u);
        auto p = recount(c, q, 10);
        EXPECT_EQ(p.home_count, 10u);
        EXPECT_EQ(p.others, (std::vector<std::size_t>{1, 1, 1}));
    }
}

TEST(QueryGen, RoundRobinWithoutHome) {
    auto c = blocks({5, 5, 5});
    Graph g = build_graph({}, 15);
    auto q = generate_query(g, c, {0, 4, 2, 3});
    ASSERT_EQ(q.size(), 4u);
    auto p = recount(c, q, 0);
    EXPECT_EQ(p.others, (std::vector<std::size_t>{2, 2}));
}

TEST(QueryGen, ProfileRecountOverGrid) {
    auto pp = planted_partition(6, 10, 0.5, 0.05, 99);
    for (std::size_t n : {0u, 1u, 4u}) {
        for (std::size_t m : {0u, 1u, 3u, 7u}) {
            for (std::size_t k = (m == 0 ? 0 : 1); k <= std::min<std::size_t>(m, 5); ++k) {
                if (n + m == 0) {
                    continue;
                }
                for (std::uint64_t seed = 0; seed < 5; ++seed) {
                    auto q = generate_query(pp.graph, pp.communities, {n, m, k, seed});
                    ASSERT_EQ(q.size(), n + m);
                    std::map<std::uint32_t, std::size_t> per;
                    for (VertexId v : q) {
                        ++per[pp.communities.community_of(v)];
                    }
                    const std::size_t expected_communities = k + (n > 0 ? 1 : 0);
                    EXPECT_EQ(per.size(), expected_communities);
                    if (n > 0) {
                        // Find a community with exactly n such that the rest spread round-robin.
                        bool found = false;
                        for (auto [home, count] : per) {
                            if (count != n) {
                                continue;
                            }
                            std::size_t lo = m, hi = 0;
                            for (auto [c, k2] : per) {
                                if (c != home) {
                                    lo = std::min(lo, k2);
                                    hi = std::max(hi, k2);
                                }
                            }
                            found = found || m == 0 || hi - lo <= 1;
                        }
                        EXPECT_TRUE(found);
                    } else if (m > 0) {
                        std::size_t lo = m, hi = 0;
                        for (auto [c, k2] : per) {
                            lo = std::min(lo, k2);
                            hi = std::max(hi, k2);
                        }
                        EXPECT_LE(hi - lo, 1u);
                    }
                }
            }
        }
    }
}

TEST(QueryGen, Deterministic) {
    auto pp = planted_partition(4, 20, 0.3, 0.01, 5);
    QueryParams p{6, 4, 2, 1234};
    EXPECT_EQ(generate_query(pp.graph, pp.communities, p),
              generate_query(pp.graph, pp.communities, p));
    std::set<std::vector<VertexId>> distinct;
    for (std::uint64_t s = 0; s < 10; ++s) {
        distinct.insert(generate_query(pp.graph, pp.communities, {6, 4, 2, s}).members());
    }
    EXPECT_GT(distinct.size(), 1u);
}

TEST(QueryGen, InfeasibleParameters) {
    auto c = blocks({4, 4, 2});
    Graph g = build_graph({}, 10);
    EXPECT_THROW(generate_query(g, c, {5, 0, 0, 0}), InputError);
    EXPECT_THROW(generate_query(g, c, {1, 2, 3, 0}), InputError);
    EXPECT_THROW(generate_query(g, c, {0, 0, 0, 0}), InputError);
    EXPECT_THROW(generate_query(g, c, {1, 3, 0, 0}), InputError);
    EXPECT_THROW(generate_query(g, c, {4, 6, 2, 0}), InputError);
    try {
        generate_query(g, c, {5, 0, 0, 0});
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
    }
}

TEST(QueryGen, MismatchedCommunityFile) {
    auto c = blocks({3, 3});
    Graph g = build_graph({}, 7);
    EXPECT_THROW(generate_query(g, c, {1, 0, 0, 0}), InputError);
}

TEST(PlantedPartition, Regimes) {
    auto cliques = planted_partition(3, 5, 1.0, 0.0, 7);
    EXPECT_EQ(cliques.graph.vertex_count(), 15u);
    EXPECT_EQ(cliques.graph.edge_count(), 30u);
    EXPECT_EQ(connected_components(cliques.graph).size(), 3u);
    for (VertexId v = 0; v < 15; ++v) {
        EXPECT_EQ(cliques.communities.community_of(v), v / 5);
    }

    auto empty = planted_partition(3, 5, 0.0, 0.0, 7);
    EXPECT_EQ(empty.graph.edge_count(), 0u);

    auto a = planted_partition(4, 50, 0.3, 0.01, 2024);
    auto b = planted_partition(4, 50, 0.3, 0.01, 2024);
    EXPECT_EQ(a.graph.edges(), b.graph.edges());
    auto other = planted_partition(4, 50, 0.3, 0.01, 2025);
    EXPECT_NE(a.graph.edges(), other.graph.edges());
}

TEST(PlantedPartition, InvalidProbabilities) {
    EXPECT_THROW(planted_partition(2, 3, 0.2, 0.5, 0), InputError);
    EXPECT_THROW(planted_partition(2, 3, 1.5, 0.0, 0), InputError);
    EXPECT_THROW(planted_partition(2, 3, 0.5, -0.1, 0), InputError);
}

TEST(Communities, ReadRenumbersDensely) {
    std::istringstream edges("a b\nb c\nc d\n");
    auto g = read_edge_list(edges);
    std::istringstream in("# comment\na 40\nb 40\nc 7\nd 100\n");
    auto c = read_communities(in, g);
    EXPECT_EQ(c.community_count(), 3u);
    EXPECT_EQ(c.membership(), (std::vector<std::uint32_t>{1, 1, 0, 2}));

    std::ostringstream out;
    write_communities(out, g, c);
    std::istringstream back(out.str());
    EXPECT_EQ(read_communities(back, g).membership(), c.membership());
}

TEST(Communities, ReadErrors) {
    auto g = oracle::path(3);
    auto parse = [&](const std::string& text) {
        std::istringstream in(text);
        return read_communities(in, g);
    };
    EXPECT_THROW(parse("0 1\n1 1\n"), InputError);
    EXPECT_THROW(parse("0 1\n1 1\n2 1\n1 2\n"), InputError);
    EXPECT_THROW(parse("0 1\n1 1\n7 1\n"), InputError);
    EXPECT_THROW(parse("0 1\n1 x\n2 1\n"), InputError);
    EXPECT_THROW(CommunityAssignment({0, 2}), InputError);
}

TEST(DeriveSeed, Distinct) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seen.insert(derive_seed(42, i));
    }
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}
