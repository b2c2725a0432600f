#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

/// Evaluation statistics of one solution S for query Q.
struct SolutionReport {
    double inefficiency = 0.0;
    std::size_t vertex_count = 0;
    double density = 0.0; ///< 0 when |S| < 2
    std::size_t component_count = 0;
    std::size_t singleton_query_count = 0; ///< query vertices isolated in G[S]
    VertexSet added_vertices;              ///< S \ Q
    double mean_betweenness_added = 0.0;   ///< measured in the full graph; 0 if nothing added
    double mean_harmonic_added = 0.0;      ///< measured in the full graph; 0 if nothing added
    double runtime_ms = 0.0;
};

/// Full-graph centralities, computed once and shared across many reports.
struct GraphCentralities {
    std::vector<double> betweenness;
    std::vector<double> harmonic;

    static GraphCentralities compute(const Graph& g);
};

/// Throws InputError unless Q ⊆ S ⊆ V(g).
SolutionReport solution_stats(const Graph& g, const VertexSet& query, const VertexSet& solution);
SolutionReport solution_stats(const Graph& g, const GraphCentralities& centralities,
                              const VertexSet& query, const VertexSet& solution);

/// Field-wise mean over a batch; added_vertices is left empty.
struct ReportMeans {
    double inefficiency = 0.0;
    double vertex_count = 0.0;
    double density = 0.0;
    double component_count = 0.0;
    double singleton_query_count = 0.0;
    double added_count = 0.0;
    double mean_betweenness_added = 0.0;
    double mean_harmonic_added = 0.0;
    double runtime_ms = 0.0;
};

ReportMeans mean_of(std::span<const SolutionReport> reports);

/// Shortest decimal text that round-trips the double.
std::string format_number(double x);

/// CSV columns for one SolutionReport (added vertices joined by ';').
std::vector<std::string> report_csv_header();
std::vector<std::string> report_csv_fields(const SolutionReport& r);
std::vector<std::string> report_csv_fields(const ReportMeans& m);

/// Header, one row per report prefixed by its run index, and a trailing "mean" row.
void write_reports_csv(std::ostream& out, std::span<const SolutionReport> reports);

/// Joins fields with commas and a trailing newline.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace selcon
