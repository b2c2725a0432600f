#include "selcon/hardness.hpp"

#include <string>

#include "selcon/connectors.hpp"
#include "selcon/errors.hpp"

namespace selcon {

void Cnf3Formula::validate() const {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto& c = clauses[i];
        for (std::size_t a = 0; a < 3; ++a) {
            if (c[a].variable >= variable_count) {
                throw InputError("clause " + std::to_string(i + 1) + " uses variable " +
                                 std::to_string(c[a].variable + 1) + " beyond the declared " +
                                 std::to_string(variable_count));
            }
            for (std::size_t b = a + 1; b < 3; ++b) {
                if (c[a].variable == c[b].variable) {
                    throw InputError("clause " + std::to_string(i + 1) + " repeats variable " +
                                     std::to_string(c[a].variable + 1));
                }
            }
        }
    }
}

std::optional<std::size_t> Cnf3Formula::first_falsified(const Assignment& f) const {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        bool sat = false;
        for (const auto& lit : clauses[i]) {
            sat = sat || (f.at(lit.variable) == lit.positive);
        }
        if (!sat) {
            return i;
        }
    }
    return std::nullopt;
}

bool Cnf3Formula::satisfied_by(const Assignment& f) const { return !first_falsified(f); }

bool compatible(const PartialAssignment& x, const PartialAssignment& y) {
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            if (x.variables[a] == y.variables[b] && x.values[a] != y.values[b]) {
                return false;
            }
        }
    }
    return true;
}

const PartialAssignment& ReductionInstance::assignment(VertexId s_vertex) const {
    return assignment_of.at(s_vertex - gadgets.front().s_first);
}

std::uint64_t default_block_size(std::size_t clause_count) {
    return 6 * clause_count * clause_count + 1;
}

ReductionInstance reduce_3sat(const Cnf3Formula& phi, std::optional<std::uint64_t> block_override) {
    phi.validate();
    const std::size_t m = phi.clauses.size();
    if (m == 0) {
        throw InputError("formula has no clauses");
    }
    ReductionInstance inst;
    inst.formula = phi;
    inst.block_size = block_override.value_or(default_block_size(m));
    inst.uses_default_block_size = !block_override || *block_override == default_block_size(m);
    if (inst.block_size == 0) {
        throw InputError("block size must be positive");
    }
    const std::uint64_t big_m = inst.block_size;
    const auto md = static_cast<double>(m);
    const auto bd = static_cast<double>(big_m);
    inst.b1 = bd * bd * md * (md - 0.5);
    inst.b2 = bd * md * (md - 1.0) / 2.0;

    const auto side = static_cast<VertexId>(m * big_m);
    const VertexId n = 2 * side + static_cast<VertexId>(7 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto off = static_cast<VertexId>(i * big_m);
        inst.gadgets.push_back({off, side + off, 2 * side + static_cast<VertexId>(7 * i)});
        const auto& clause = phi.clauses[i];
        for (unsigned pattern = 1; pattern < 8; ++pattern) {
            PartialAssignment pa;
            for (std::size_t l = 0; l < 3; ++l) {
                const bool literal_true = (pattern >> (2 - l)) & 1U;
                pa.variables[l] = clause[l].variable;
                pa.values[l] = clause[l].positive ? literal_true : !literal_true;
            }
            inst.assignment_of.push_back(pa);
        }
    }

    std::vector<Edge> edges;
    for (VertexId u = 0; u < side; ++u) {
        for (VertexId v = u + 1; v < side; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(side + u, side + v);
        }
    }
    for (const auto& gadget : inst.gadgets) {
        for (VertexId j = 0; j < 7; ++j) {
            for (VertexId t = 0; t < big_m; ++t) {
                edges.emplace_back(gadget.s_first + j, gadget.a_first + t);
                edges.emplace_back(gadget.s_first + j, gadget.b_first + t);
            }
        }
    }
    const auto s_count = static_cast<VertexId>(inst.assignment_of.size());
    for (VertexId x = 0; x < s_count; ++x) {
        for (VertexId y = x + 1; y < s_count; ++y) {
            if (compatible(inst.assignment_of[x], inst.assignment_of[y])) {
                edges.emplace_back(2 * side + x, 2 * side + y);
            }
        }
    }
    inst.graph = build_graph(edges, n);
    inst.query = VertexSet::range(0, 2 * side);
    return inst;
}

VertexSet solution_from_assignment(const ReductionInstance& inst, const Assignment& f) {
    const auto& phi = inst.formula;
    if (f.size() != phi.variable_count) {
        throw InputError("assignment has " + std::to_string(f.size()) + " values for " +
                         std::to_string(phi.variable_count) + " variables");
    }
    if (auto bad = phi.first_falsified(f)) {
        throw InputError("assignment falsifies clause " + std::to_string(*bad + 1));
    }
    std::vector<VertexId> chosen;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        unsigned pattern = 0;
        for (std::size_t l = 0; l < 3; ++l) {
            const auto& lit = phi.clauses[i][l];
            pattern = (pattern << 1) | ((f[lit.variable] == lit.positive) ? 1U : 0U);
        }
        chosen.push_back(inst.gadgets[i].s_first + pattern - 1);
    }
    for (std::size_t x = 0; x < chosen.size(); ++x) {
        for (std::size_t y = x + 1; y < chosen.size(); ++y) {
            if (!compatible(inst.assignment(chosen[x]), inst.assignment(chosen[y]))) {
                throw InputError("assignment vertices of clauses " + std::to_string(x + 1) +
                                 " and " + std::to_string(y + 1) + " are incompatible");
            }
        }
    }
    return inst.query.set_union(VertexSet(std::move(chosen)));
}

std::optional<Assignment> brute_force_sat(const Cnf3Formula& phi) {
    const std::uint32_t n = phi.variable_count;
    if (n > 30) {
        throw CapExceededError("brute-force SAT refused: variables", n, 30);
    }
    Assignment f(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::uint32_t v = 0; v < n; ++v) {
            f[v] = (bits >> v) & 1U;
        }
        if (phi.satisfied_by(f)) {
            return f;
        }
    }
    return std::nullopt;
}

ReductionVerification verify_reduction(const Cnf3Formula& phi,
                                       std::optional<std::uint64_t> block_override,
                                       unsigned workers) {
    phi.validate();
    if (phi.clauses.size() > kMaxVerifiedClauses) {
        throw CapExceededError("reduction verification refused: clauses", phi.clauses.size(),
                               kMaxVerifiedClauses);
    }
    const auto inst = reduce_3sat(phi, block_override);
    ReductionVerification out;
    out.clause_count = inst.clause_count();
    out.block_size = inst.block_size;
    out.vertex_count = inst.graph.vertex_count();
    out.b1 = inst.b1;
    out.b2 = inst.b2;
    out.threshold = inst.threshold();
    out.witness = brute_force_sat(phi);
    out.satisfiable = out.witness.has_value();

    const auto everything = VertexSet::range(0, static_cast<VertexId>(inst.graph.vertex_count()));
    const std::size_t free_vertices = everything.size() - inst.query.size();
    out.best_solution =
        exhaustive_relax(inst.graph, everything, inst.query, {free_vertices, workers});
    out.min_inefficiency = subgraph_inefficiency(inst.graph, out.best_solution);
    out.below_threshold = out.min_inefficiency <= out.threshold;
    out.equivalence_holds = out.satisfiable == out.below_threshold;
    return out;
}

} // namespace selcon
