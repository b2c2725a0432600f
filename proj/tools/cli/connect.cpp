#include <chrono>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "selcon/connectors.hpp"
#include "selcon/edge_list.hpp"
#include "selcon/errors.hpp"
#include "selcon/report.hpp"
#include "selcon/report_json.hpp"

namespace selcon::cli {
namespace {

using Json = nlohmann::ordered_json;

Json vertex_json(const Graph& g, VertexId v) {
    if (g.has_labels()) {
        return g.label(v);
    }
    return v;
}

Json set_json(const Graph& g, const VertexSet& s) {
    Json a = Json::array();
    for (VertexId v : s) {
        a.push_back(vertex_json(g, v));
    }
    return a;
}

std::string dot_name(const Graph& g, VertexId v) {
    std::string name = g.has_labels() ? g.label(v) : std::to_string(v);
    std::string quoted = "\"";
    for (char ch : name) {
        if (ch == '"' || ch == '\\') {
            quoted += '\\';
        }
        quoted += ch;
    }
    return quoted + '"';
}

std::string to_dot(const Graph& g, const VertexSet& query, const VertexSet& solution) {
    std::ostringstream s;
    s << "graph selcon {\n";
    for (VertexId v : solution) {
        s << "  " << dot_name(g, v) << " [color=" << (query.contains(v) ? "blue" : "green") << "];\n";
    }
    for (VertexId u : solution) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v && solution.contains(v)) {
                s << "  " << dot_name(g, u) << " -- " << dot_name(g, v) << ";\n";
            }
        }
    }
    s << "}\n";
    return s.str();
}

VertexSet read_query(const Graph& g, const std::string& arg) {
    std::vector<std::string> tokens;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        tokens = read_token_file(arg);
    } else {
        tokens = split_tokens(arg);
    }
    if (tokens.empty()) {
        throw InputError("empty query");
    }
    return VertexResolver(g).resolve_all(tokens);
}

} // namespace

int cmd_connect(const ConnectArgs& a, std::ostream& out) {
    const Graph g = read_edge_list_file(a.graph);
    const VertexSet query = read_query(g, a.query);

    const auto start = std::chrono::steady_clock::now();
    VertexSet solution;
    std::optional<RelaxTrace> trace;
    if (a.algorithm == "gra_mis") {
        auto r = gra_mis(g, query, {a.workers, true});
        solution = r.solution;
        trace = r.trace;
    } else if (a.algorithm == "ctp_seeded") {
        auto r = greedy_relax(g, ctp_connector(g, query), query, {a.workers, true});
        solution = r.solution;
        trace = r.trace;
    } else if (a.algorithm == "exhaustive") {
        solution = exhaustive_relax(g, mwc_connector(g, query), query,
                                    {a.cap.value_or(kDefaultExhaustiveCap), a.workers});
    } else {
        solution = brute_force_mis(g, query, {a.cap.value_or(kDefaultBruteForceCap), a.workers});
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    if (a.format == "dot") {
        emit(a.out, to_dot(g, query, solution), out);
        return kOk;
    }

    auto report = solution_stats(g, query, solution);
    if (a.timing) {
        report.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    }

    const auto sub = induced_subgraph(g, solution);
    Json components = Json::array();
    for (const auto& comp : connected_components(sub.graph)) {
        std::vector<VertexId> members;
        std::size_t query_count = 0;
        for (VertexId local : comp) {
            const VertexId v = sub.to_parent[local];
            members.push_back(v);
            query_count += query.contains(v) ? 1 : 0;
        }
        const VertexSet part(members);
        components.push_back({{"vertices", set_json(g, part)},
                              {"size", part.size()},
                              {"query_count", query_count},
                              {"inefficiency", subgraph_inefficiency(g, part)}});
    }

    Json j;
    j["algorithm"] = a.algorithm;
    j["seed"] = a.seed;
    j["query"] = set_json(g, query);
    j["solution"] = set_json(g, solution);
    j["components"] = components;
    auto rj = to_json(report);
    rj["added_vertices"] = set_json(g, report.added_vertices);
    j["report"] = rj;
    if (a.trace && trace) {
        auto tj = to_json(*trace);
        for (auto& step : tj["steps"]) {
            if (!step["removed"].is_null()) {
                step["removed"] = vertex_json(g, step["removed"].get<VertexId>());
            }
        }
        j["trace"] = tj;
    }
    emit(a.out, j.dump(2) + "\n", out);
    return kOk;
}

} // namespace selcon::cli
