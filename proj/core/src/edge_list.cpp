#include "selcon/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "selcon/errors.hpp"

namespace selcon {
namespace {

std::optional<VertexId> parse_id(std::string_view token) {
    VertexId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

struct RawLine {
    std::size_t line_number;
    std::vector<std::string> tokens;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<RawLine> lines;
    bool integer_mode = true;
    std::string text;
    for (std::size_t line_number = 1; std::getline(in, text); ++line_number) {
        auto body = trim(text);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::istringstream tokens{std::string(body)};
        RawLine raw{line_number, {}};
        for (std::string tok; tokens >> tok;) {
            raw.tokens.push_back(std::move(tok));
        }
        if (raw.tokens.size() > 2) {
            throw InputError("line " + std::to_string(line_number) + ": expected 1 or 2 tokens, got " +
                             std::to_string(raw.tokens.size()));
        }
        for (const auto& tok : raw.tokens) {
            if (!parse_id(tok)) {
                integer_mode = false;
            }
        }
        lines.push_back(std::move(raw));
    }

    std::vector<Edge> edges;
    std::size_t vertex_count = 0;
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;

    auto intern = [&](const std::string& tok) -> VertexId {
        if (integer_mode) {
            VertexId id = *parse_id(tok);
            vertex_count = std::max<std::size_t>(vertex_count, std::size_t{id} + 1);
            return id;
        }
        auto [it, inserted] = ids.try_emplace(tok, static_cast<VertexId>(labels.size()));
        if (inserted) {
            labels.push_back(tok);
        }
        return it->second;
    };

    for (const auto& raw : lines) {
        VertexId u = intern(raw.tokens[0]);
        if (raw.tokens.size() == 2) {
            VertexId v = intern(raw.tokens[1]);
            if (u == v) {
                throw InputError("line " + std::to_string(raw.line_number) + ": self-loop on '" +
                                 raw.tokens[0] + "'");
            }
            edges.emplace_back(u, v);
        }
    }
    if (!integer_mode) {
        vertex_count = labels.size();
    }
    Graph g = build_graph(edges, vertex_count);
    if (!integer_mode) {
        g = g.with_labels(std::move(labels));
    }
    return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file '" + path.string() + "'");
    }
    try {
        return read_edge_list(in);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) == 0) {
            out << g.label(u) << '\n';
        }
        for (VertexId v : g.neighbors(u)) {
            if (u < v) {
                out << g.label(u) << ' ' << g.label(v) << '\n';
            }
        }
    }
}

VertexResolver::VertexResolver(const Graph& g) : vertex_count_(g.vertex_count()) {
    if (g.has_labels()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            by_label_.emplace(g.labels()[v], v);
        }
    }
}

VertexId VertexResolver::resolve(std::string_view token) const {
    if (!by_label_.empty()) {
        auto it = by_label_.find(std::string(token));
        if (it == by_label_.end()) {
            throw InputError("unknown vertex label '" + std::string(token) + "'");
        }
        return it->second;
    }
    auto id = parse_id(token);
    if (!id || *id >= vertex_count_) {
        throw InputError("unknown vertex label '" + std::string(token) + "'");
    }
    return *id;
}

VertexSet VertexResolver::resolve_all(const std::vector<std::string>& tokens) const {
    std::vector<VertexId> ids;
    ids.reserve(tokens.size());
    for (const auto& tok : tokens) {
        ids.push_back(resolve(tok));
    }
    return VertexSet(std::move(ids));
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

std::vector<std::string> read_token_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open file '" + path.string() + "'");
    }
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        auto pieces = split_tokens(body);
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return out;
}

} // namespace selcon
