#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

/// Parses the edge-list text format.
///
/// One edge per line as two whitespace-separated tokens. Lines starting with
/// '#' and blank lines are skipped. A line holding a single token declares a
/// vertex without edges. If every token is a
/// non-negative integer the ids are used directly and the vertex count is
/// max id + 1; otherwise tokens are labels and ids are assigned in first-seen
/// order. Errors carry the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Writes `g` in the same format, using labels when present. Vertices without
/// edges are written as single-token lines.
void write_edge_list(std::ostream& out, const Graph& g);

/// Maps external vertex names (labels, or decimal ids for unlabeled graphs) to ids.
class VertexResolver {
public:
    explicit VertexResolver(const Graph& g);

    /// Throws InputError naming the token if it does not denote a vertex.
    VertexId resolve(std::string_view token) const;
    VertexSet resolve_all(const std::vector<std::string>& tokens) const;

private:
    std::size_t vertex_count_;
    std::unordered_map<std::string, VertexId> by_label_;
};

/// Splits on commas and whitespace; empty pieces are dropped.
std::vector<std::string> split_tokens(std::string_view text);

/// Reads all tokens of a file (comments starting with '#' skipped).
std::vector<std::string> read_token_file(const std::filesystem::path& path);

} // namespace selcon
