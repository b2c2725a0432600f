#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "selcon/connectors.hpp"
#include "selcon/errors.hpp"
#include "selcon/hardness.hpp"
#include "selcon/metrics.hpp"

using namespace selcon;

namespace {

Clause3 clause(int a, int b, int c) {
    auto lit = [](int x) { return Literal{static_cast<std::uint32_t>(std::abs(x) - 1), x > 0}; };
    return {lit(a), lit(b), lit(c)};
}

Cnf3Formula random_formula(std::size_t m, std::uint32_t vars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Cnf3Formula phi{vars, {}};
    std::vector<std::uint32_t> pool(vars);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        Clause3 c;
        for (std::size_t l = 0; l < 3; ++l) {
            c[l] = {pool[l], static_cast<bool>(rng() & 1U)};
        }
        phi.clauses.push_back(c);
    }
    return phi;
}

/// Ordered-pair inefficiency of Q plus one pairwise compatible assignment
/// vertex per clause, summed by distance class.
double assignment_solution_cost(std::size_t m, std::uint64_t big_m) {
    const double md = static_cast<double>(m);
    const double bm = static_cast<double>(big_m);
    const double a_to_own_b = bm * bm * md * 0.5;                    // d = 2
    const double a_to_other_b = bm * bm * md * (md - 1.0) * (2.0 / 3.0); // d = 3
    const double s_to_other_blocks = 2.0 * bm * md * (md - 1.0) * 0.5;   // d = 2
    return 2.0 * (a_to_own_b + a_to_other_b) + 2.0 * s_to_other_blocks;
}

} // namespace

TEST(Reduce3Sat, SingleClauseConstants) {
    Cnf3Formula phi{3, {clause(1, 2, 3)}};
    auto inst = reduce_3sat(phi);
    EXPECT_EQ(inst.block_size, 7u);
    EXPECT_EQ(inst.graph.vertex_count(), 21u);
    EXPECT_EQ(inst.b1, 24.5);
    EXPECT_EQ(inst.b2, 0.0);
    EXPECT_TRUE(inst.uses_default_block_size);
}

TEST(Reduce3Sat, TwoClauseConstants) {
    Cnf3Formula phi{4, {clause(1, 2, 3), clause(-1, 2, 4)}};
    auto inst = reduce_3sat(phi);
    EXPECT_EQ(inst.block_size, 25u);
    EXPECT_EQ(inst.graph.vertex_count(), 114u);
    EXPECT_EQ(inst.b1, 1875.0);
    EXPECT_EQ(inst.b2, 25.0);
    EXPECT_EQ(inst.threshold(), 3800.0);
    EXPECT_LE(diameter(inst.graph), 3u);
}

TEST(Reduce3Sat, RepeatedVariableRejected) {
    Cnf3Formula phi{3, {clause(1, -1, 2)}};
    EXPECT_THROW(reduce_3sat(phi), InputError);
}

TEST(Reduce3Sat, StructureAudit) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t m = 1 + seed % 3;
        auto phi = random_formula(m, 3 + seed % 4, seed);
        for (std::uint64_t big_m : std::vector<std::uint64_t>{2, 3, default_block_size(m)}) {
            if (m == 3 && big_m > 3) {
                continue;
            }
            auto inst = reduce_3sat(phi, big_m);
            const auto& g = inst.graph;
            EXPECT_EQ(g.vertex_count(), 2 * m * big_m + 7 * m);
            EXPECT_EQ(inst.query, VertexSet::range(0, static_cast<VertexId>(2 * m * big_m)));
            EXPECT_LE(diameter(g), 3u);
            for (VertexId v = 0; v < 2 * m * big_m; ++v) {
                EXPECT_EQ(g.degree(v), m * big_m + 6);
            }
            for (std::size_t i = 0; i < m; ++i) {
                const auto& gi = inst.gadgets[i];
                EXPECT_EQ(gi.a_first, i * big_m);
                EXPECT_EQ(gi.b_first, m * big_m + i * big_m);
                for (VertexId x = gi.s_first; x < gi.s_first + 7; ++x) {
                    for (VertexId y = x + 1; y < gi.s_first + 7; ++y) {
                        EXPECT_FALSE(g.has_edge(x, y));
                    }
                }
            }
            const VertexId s0 = inst.gadgets[0].s_first;
            for (VertexId x = s0; x < g.vertex_count(); ++x) {
                for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
                    EXPECT_EQ(g.has_edge(x, y), compatible(inst.assignment(x), inst.assignment(y)));
                }
            }
        }
    }
}

TEST(Reduce3Sat, AssignmentVerticesEnumerateSatisfyingPatterns) {
    Cnf3Formula phi{3, {clause(1, -2, 3)}};
    auto inst = reduce_3sat(phi);
    // Pattern 1 (0b001): only the third literal true.
    const auto& first = inst.assignment(inst.gadgets[0].s_first);
    EXPECT_EQ(first.values, (std::array<bool, 3>{false, true, true}));
    // Pattern 7: every literal true.
    const auto& last = inst.assignment(inst.gadgets[0].s_first + 6);
    EXPECT_EQ(last.values, (std::array<bool, 3>{true, false, true}));
}

TEST(Reduce3Sat, DistanceCasesForSupersetsOfQuery) {
    auto phi = random_formula(2, 5, 42);
    auto inst = reduce_3sat(phi, 3);
    const auto& g0 = inst.gadgets[0];
    const auto& g1 = inst.gadgets[1];
    for (int variant = 0; variant < 3; ++variant) {
        std::vector<VertexId> extra;
        if (variant >= 1) {
            extra.push_back(g0.s_first + 2);
        }
        if (variant >= 2) {
            extra.push_back(g1.s_first + 4);
        }
        auto t = inst.query.set_union(VertexSet(extra));
        auto sub = induced_subgraph(inst.graph, t);
        auto d = oracle::apsp(sub.graph);
        auto at = [&](VertexId u, VertexId v) { return d[*t.index_of(u)][*t.index_of(v)]; };
        EXPECT_EQ(at(g0.a_first, g1.a_first + 1), 1);
        EXPECT_EQ(at(g0.a_first, g0.b_first + 1) == 2, variant >= 1);
        EXPECT_GE(at(g0.a_first, g0.b_first + 1), 2);
        EXPECT_GE(at(g0.a_first, g1.b_first), 3);
        if (variant == 0) {
            EXPECT_GE(at(g1.a_first, g1.b_first), 3);
        }
    }
}

TEST(Reduce3Sat, AssignmentSolutionCostByDistanceClass) {
    Cnf3Formula one{3, {clause(1, 2, 3)}};
    auto inst1 = reduce_3sat(one);
    auto t1 = solution_from_assignment(inst1, *brute_force_sat(one));
    EXPECT_EQ(subgraph_inefficiency(inst1.graph, t1), inst1.threshold());
    EXPECT_EQ(assignment_solution_cost(1, 7), 49.0);

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto phi = random_formula(2, 4 + seed % 3, 77 + seed);
        auto inst = reduce_3sat(phi, 4);
        auto t = solution_from_assignment(inst, *brute_force_sat(phi));
        const double expected = assignment_solution_cost(2, 4);
        EXPECT_NEAR(subgraph_inefficiency(inst.graph, t), expected, 1e-9);
        EXPECT_NEAR(oracle::inefficiency(induced_subgraph(inst.graph, t).graph), expected, 1e-9);
    }
}

TEST(Reduce3Sat, ThresholdCharacterizationAtDefaultBlockSize) {
    // One clause: dropping the only gadget vertex leaves A and B disconnected,
    // far above the threshold.
    Cnf3Formula one{3, {clause(1, 2, 3)}};
    auto inst1 = reduce_3sat(one);
    EXPECT_GT(subgraph_inefficiency(inst1.graph, inst1.query), inst1.threshold());

    // Two clauses: the assignment solution sits well below 2(B1 + B2), and so
    // does a solution that skips the second gadget entirely.
    Cnf3Formula two{4, {clause(1, 2, 3), clause(-1, 2, 4)}};
    auto inst2 = reduce_3sat(two);
    auto t = solution_from_assignment(inst2, *brute_force_sat(two));
    EXPECT_NEAR(subgraph_inefficiency(inst2.graph, t), assignment_solution_cost(2, 25), 1e-9);
    EXPECT_LT(subgraph_inefficiency(inst2.graph, t), inst2.threshold());
    auto skip_second = inst2.query.set_union(VertexSet{inst2.gadgets[0].s_first});
    EXPECT_LT(subgraph_inefficiency(inst2.graph, skip_second), inst2.threshold());
}

TEST(SolutionFromAssignment, SingleClause) {
    Cnf3Formula phi{3, {clause(1, 2, 3)}};
    auto inst = reduce_3sat(phi);
    auto t = solution_from_assignment(inst, {true, false, false});
    EXPECT_EQ(t.size(), 2 * 7 + 1u);
    EXPECT_TRUE(t.contains(inst.gadgets[0].s_first + 0b100 - 1));
}

TEST(SolutionFromAssignment, FalsifyingAssignmentNamesClause) {
    Cnf3Formula phi{4, {clause(1, 2, 3), clause(-1, -2, 4)}};
    auto inst = reduce_3sat(phi, 2);
    try {
        solution_from_assignment(inst, {true, true, false, false});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("clause 2"), std::string::npos);
    }
}

TEST(SolutionFromAssignment, DisjointClausesAlwaysCompatible) {
    Cnf3Formula phi{6, {clause(1, 2, 3), clause(4, -5, 6)}};
    auto inst = reduce_3sat(phi, 2);
    for (unsigned bits = 0; bits < 64; ++bits) {
        Assignment f(6);
        for (unsigned v = 0; v < 6; ++v) {
            f[v] = (bits >> v) & 1U;
        }
        if (!phi.satisfied_by(f)) {
            EXPECT_THROW(solution_from_assignment(inst, f), InputError);
            continue;
        }
        auto t = solution_from_assignment(inst, f);
        std::vector<VertexId> chosen;
        for (VertexId v : t) {
            if (!inst.query.contains(v)) {
                chosen.push_back(v);
            }
        }
        ASSERT_EQ(chosen.size(), 2u);
        EXPECT_TRUE(inst.graph.has_edge(chosen[0], chosen[1]));
    }
}

TEST(Compatibility, SharedVariableConflict) {
    PartialAssignment x{{0, 1, 2}, {true, false, true}};
    PartialAssignment y{{0, 3, 4}, {false, true, true}};
    PartialAssignment z{{5, 2, 6}, {false, true, true}};
    EXPECT_FALSE(compatible(x, y));
    EXPECT_TRUE(compatible(x, z));
    EXPECT_TRUE(compatible(y, z));
}

TEST(VerifyReduction, SatisfiableSmallFormulas) {
    Cnf3Formula one{3, {clause(-1, 2, -3)}};
    auto v = verify_reduction(one);
    EXPECT_TRUE(v.satisfiable);
    EXPECT_TRUE(v.below_threshold);
    EXPECT_TRUE(v.equivalence_holds);
    EXPECT_EQ(v.min_inefficiency, 49.0);

    // z forced true would satisfy both; the search must find a cost at or below threshold.
    Cnf3Formula two{3, {clause(1, 2, 3), clause(-1, 2, 3)}};
    auto w = verify_reduction(two);
    EXPECT_TRUE(w.satisfiable);
    EXPECT_LE(w.min_inefficiency, w.threshold);
    EXPECT_TRUE(w.equivalence_holds);
}

TEST(VerifyReduction, RefusesLargeFormulas) {
    auto phi = random_formula(4, 6, 1);
    EXPECT_THROW(verify_reduction(phi, 2), CapExceededError);
}

TEST(VerifyReduction, ReducedBlockSizeRuns) {
    auto phi = random_formula(3, 5, 9);
    auto v = verify_reduction(phi, 2);
    EXPECT_EQ(v.vertex_count, 2 * 3 * 2 + 21u);
    EXPECT_TRUE(v.satisfiable);
    EXPECT_EQ(v.best_solution.size() >= 2 * 3 * 2u, true);
    EXPECT_TRUE(v.equivalence_holds);
}

TEST(BruteForceSat, FormulasWithFewClausesAreSatisfiable) {
    // Each clause rules out one eighth of the assignments of its variables,
    // so fewer than eight clauses can never be contradictory.
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto phi = random_formula(1 + seed % 3, 3 + seed % 4, 1000 + seed);
        auto f = brute_force_sat(phi);
        ASSERT_TRUE(f.has_value());
        EXPECT_TRUE(phi.satisfied_by(*f));
    }
    Cnf3Formula all_patterns{3, {}};
    for (int mask = 0; mask < 8; ++mask) {
        all_patterns.clauses.push_back(clause(mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3));
    }
    EXPECT_FALSE(brute_force_sat(all_patterns).has_value());
}

TEST(Dimacs, ParseAndRoundTrip) {
    std::istringstream in("c example\np cnf 4 2\n1 -2 3 0\n-1 2\n4 0\n");
    auto phi = parse_dimacs(in);
    ASSERT_EQ(phi.clauses.size(), 2u);
    EXPECT_EQ(phi.clauses[1][0], (Literal{0, false}));
    EXPECT_EQ(phi.clauses[1][2], (Literal{3, true}));
    std::ostringstream out;
    write_dimacs(out, phi);
    std::istringstream back(out.str());
    auto again = parse_dimacs(back);
    EXPECT_EQ(again.clauses, phi.clauses);
}

TEST(Dimacs, Errors) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_dimacs(in);
    };
    EXPECT_THROW(parse("p cnf 4 1\n1 2 3 4 0\n"), InputError);
    EXPECT_THROW(parse("p cnf 3 1\n1 -1 2 0\n"), InputError);
    EXPECT_THROW(parse("1 2 3 0\n"), InputError);
    EXPECT_THROW(parse("p cnf 3 2\n1 2 3 0\n"), InputError);
    EXPECT_THROW(parse("p cnf 3 1\n1 2 5 0\n"), InputError);
}
