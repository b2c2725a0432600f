#include "selcon/report.hpp"

#include <charconv>
#include <ostream>

#include "selcon/errors.hpp"
#include "selcon/metrics.hpp"
#include "selcon/report_json.hpp"

namespace selcon {

GraphCentralities GraphCentralities::compute(const Graph& g) {
    return {selcon::betweenness(g), harmonic_centralities(g)};
}

SolutionReport solution_stats(const Graph& g, const VertexSet& query, const VertexSet& solution) {
    validate_vertex_set(g, solution, "solution");
    if (!query.is_subset_of(solution)) {
        throw InputError("query set is not contained in the solution");
    }
    // Only the added vertices need full-graph centralities.
    GraphCentralities partial;
    const auto added = solution.set_difference(query);
    if (!added.empty()) {
        partial.betweenness = betweenness(g);
        partial.harmonic.assign(g.vertex_count(), 0.0);
        for (VertexId v : added) {
            partial.harmonic[v] = harmonic_centrality(g, v);
        }
    }
    return solution_stats(g, partial, query, solution);
}

SolutionReport solution_stats(const Graph& g, const GraphCentralities& centralities,
                              const VertexSet& query, const VertexSet& solution) {
    validate_vertex_set(g, solution, "solution");
    if (!query.is_subset_of(solution)) {
        throw InputError("query set is not contained in the solution");
    }
    const auto sub = induced_subgraph(g, solution);
    const auto profile = distance_profile(sub.graph);

    SolutionReport r;
    r.inefficiency = profile.inefficiency();
    r.vertex_count = solution.size();
    r.density = solution.size() < 2 ? 0.0 : density(sub.graph);
    r.component_count = connected_components(sub.graph).size();
    for (VertexId q : query) {
        if (sub.graph.degree(static_cast<VertexId>(*solution.index_of(q))) == 0) {
            ++r.singleton_query_count;
        }
    }
    r.added_vertices = solution.set_difference(query);
    if (!r.added_vertices.empty()) {
        double bc = 0.0;
        double hc = 0.0;
        for (VertexId v : r.added_vertices) {
            bc += centralities.betweenness.at(v);
            hc += centralities.harmonic.at(v);
        }
        const auto count = static_cast<double>(r.added_vertices.size());
        r.mean_betweenness_added = bc / count;
        r.mean_harmonic_added = hc / count;
    }
    return r;
}

ReportMeans mean_of(std::span<const SolutionReport> reports) {
    ReportMeans m;
    if (reports.empty()) {
        return m;
    }
    for (const auto& r : reports) {
        m.inefficiency += r.inefficiency;
        m.vertex_count += static_cast<double>(r.vertex_count);
        m.density += r.density;
        m.component_count += static_cast<double>(r.component_count);
        m.singleton_query_count += static_cast<double>(r.singleton_query_count);
        m.added_count += static_cast<double>(r.added_vertices.size());
        m.mean_betweenness_added += r.mean_betweenness_added;
        m.mean_harmonic_added += r.mean_harmonic_added;
        m.runtime_ms += r.runtime_ms;
    }
    const auto n = static_cast<double>(reports.size());
    for (double* field : {&m.inefficiency, &m.vertex_count, &m.density, &m.component_count,
                          &m.singleton_query_count, &m.added_count, &m.mean_betweenness_added,
                          &m.mean_harmonic_added, &m.runtime_ms}) {
        *field /= n;
    }
    return m;
}

std::string format_number(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::vector<std::string> report_csv_header() {
    return {"inefficiency",          "vertex_count",           "density",
            "component_count",       "singleton_query_count",  "added_vertices",
            "mean_betweenness_added", "mean_harmonic_added",    "runtime_ms"};
}

std::vector<std::string> report_csv_fields(const SolutionReport& r) {
    std::string added;
    for (VertexId v : r.added_vertices) {
        if (!added.empty()) {
            added += ';';
        }
        added += std::to_string(v);
    }
    return {format_number(r.inefficiency),
            std::to_string(r.vertex_count),
            format_number(r.density),
            std::to_string(r.component_count),
            std::to_string(r.singleton_query_count),
            added,
            format_number(r.mean_betweenness_added),
            format_number(r.mean_harmonic_added),
            format_number(r.runtime_ms)};
}

std::vector<std::string> report_csv_fields(const ReportMeans& m) {
    return {format_number(m.inefficiency),
            format_number(m.vertex_count),
            format_number(m.density),
            format_number(m.component_count),
            format_number(m.singleton_query_count),
            format_number(m.added_count),
            format_number(m.mean_betweenness_added),
            format_number(m.mean_harmonic_added),
            format_number(m.runtime_ms)};
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << fields[i];
    }
    out << '\n';
}

void write_reports_csv(std::ostream& out, std::span<const SolutionReport> reports) {
    auto header = report_csv_header();
    header.insert(header.begin(), "run");
    write_csv_row(out, header);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        auto row = report_csv_fields(reports[i]);
        row.insert(row.begin(), std::to_string(i));
        write_csv_row(out, row);
    }
    auto mean_row = report_csv_fields(mean_of(reports));
    mean_row.insert(mean_row.begin(), "mean");
    write_csv_row(out, mean_row);
}

nlohmann::ordered_json to_json(const SolutionReport& r) {
    nlohmann::ordered_json j;
    j["inefficiency"] = r.inefficiency;
    j["vertex_count"] = r.vertex_count;
    j["density"] = r.density;
    j["component_count"] = r.component_count;
    j["singleton_query_count"] = r.singleton_query_count;
    j["added_vertices"] = r.added_vertices.members();
    j["mean_betweenness_added"] = r.mean_betweenness_added;
    j["mean_harmonic_added"] = r.mean_harmonic_added;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

SolutionReport report_from_json(const nlohmann::ordered_json& j) {
    SolutionReport r;
    r.inefficiency = j.at("inefficiency").get<double>();
    r.vertex_count = j.at("vertex_count").get<std::size_t>();
    r.density = j.at("density").get<double>();
    r.component_count = j.at("component_count").get<std::size_t>();
    r.singleton_query_count = j.at("singleton_query_count").get<std::size_t>();
    r.added_vertices = VertexSet(j.at("added_vertices").get<std::vector<VertexId>>());
    r.mean_betweenness_added = j.at("mean_betweenness_added").get<double>();
    r.mean_harmonic_added = j.at("mean_harmonic_added").get<double>();
    r.runtime_ms = j.at("runtime_ms").get<double>();
    return r;
}

nlohmann::ordered_json to_json(const RelaxTrace& trace) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json step;
        step["removed"] = s.removed ? nlohmann::ordered_json(*s.removed) : nlohmann::ordered_json(nullptr);
        step["inefficiency"] = s.inefficiency;
        step["solution_size"] = s.solution_size;
        steps.push_back(std::move(step));
    }
    nlohmann::ordered_json j;
    j["steps"] = std::move(steps);
    j["best_index"] = trace.best_index;
    return j;
}

} // namespace selcon
