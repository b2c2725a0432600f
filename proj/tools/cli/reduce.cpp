#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "selcon/connectors.hpp"
#include "selcon/edge_list.hpp"
#include "selcon/hardness.hpp"
#include "selcon/metrics.hpp"

namespace selcon::cli {

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    using Json = nlohmann::ordered_json;
    const Cnf3Formula phi = parse_dimacs_file(a.cnf);
    const ReductionInstance inst = reduce_3sat(phi, a.block_override);

    Json j;
    j["clauses"] = phi.clauses.size();
    j["variables"] = phi.variable_count;
    j["block_size"] = inst.block_size;
    j["default_block_size"] = inst.uses_default_block_size;
    j["vertex_count"] = inst.graph.vertex_count();
    j["edge_count"] = inst.graph.edge_count();
    j["query_size"] = inst.query.size();
    j["diameter"] = diameter(inst.graph);
    j["b1"] = inst.b1;
    j["b2"] = inst.b2;
    j["threshold"] = inst.threshold();

    if (!a.out.empty()) {
        std::ostringstream edges;
        write_edge_list(edges, inst.graph);
        emit(a.out + ".edges", edges.str(), out);
        std::ostringstream query;
        for (VertexId q : inst.query) {
            query << q << '\n';
        }
        emit(a.out + ".query", query.str(), out);
    }

    if (a.verify) {
        const auto v = verify_reduction(phi, a.block_override, a.workers);
        Json vj;
        vj["satisfiable"] = v.satisfiable;
        if (v.witness) {
            Json w = Json::array();
            for (bool x : *v.witness) {
                w.push_back(x);
            }
            vj["witness"] = w;
            vj["assignment_inefficiency"] =
                subgraph_inefficiency(inst.graph, solution_from_assignment(inst, *v.witness));
        } else {
            vj["witness"] = nullptr;
        }
        vj["min_inefficiency"] = v.min_inefficiency;
        Json best = Json::array();
        for (VertexId s : v.best_solution.set_difference(inst.query)) {
            best.push_back(s);
        }
        vj["best_assignment_vertices"] = best;
        vj["verdict"] = v.below_threshold;
        vj["equivalence_holds"] = v.equivalence_holds;
        j["verification"] = vj;
    }
    out << j.dump(2) << '\n';
    return kOk;
}

} // namespace selcon::cli
