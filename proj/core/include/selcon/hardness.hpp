#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "selcon/graph.hpp"

namespace selcon {

struct Literal {
    std::uint32_t variable = 0; ///< 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause3 = std::array<Literal, 3>;
using Assignment = std::vector<bool>;

/// 3-CNF formula whose clauses each mention three distinct variables.
struct Cnf3Formula {
    std::uint32_t variable_count = 0;
    std::vector<Clause3> clauses;

    /// Throws InputError on a repeated variable in a clause or an out-of-range index.
    void validate() const;
    bool satisfied_by(const Assignment& f) const;
    /// Index of the first clause `f` falsifies, if any.
    std::optional<std::size_t> first_falsified(const Assignment& f) const;
};

/// Reads DIMACS CNF: "p cnf <vars> <clauses>", clauses as nonzero integers
/// terminated by 0, 'c' comment lines. Every clause must have exactly three
/// literals over distinct variables.
Cnf3Formula parse_dimacs(std::istream& in);
Cnf3Formula parse_dimacs_file(const std::filesystem::path& path);
void write_dimacs(std::ostream& out, const Cnf3Formula& phi);

/// Truth values a clause vertex assigns to the three variables of its clause.
struct PartialAssignment {
    std::array<std::uint32_t, 3> variables{};
    std::array<bool, 3> values{};
};

/// Agree on every shared variable.
bool compatible(const PartialAssignment& x, const PartialAssignment& y);

/// Vertex ranges of one clause gadget: A and B blocks of `block_size` vertices
/// each, and 7 assignment vertices.
struct ClauseGadget {
    VertexId a_first = 0;
    VertexId b_first = 0;
    VertexId s_first = 0;
};

/// Graph, query, and constants of the 3-SAT reduction.
///
/// Layout: all A blocks first (clause-major), then all B blocks, then the 7
/// assignment vertices of each clause. Assignment vertex j of a clause encodes
/// literal truth pattern j + 1 read as a 3-bit number, first literal in the
/// most significant bit (the all-false pattern is skipped).
struct ReductionInstance {
    Cnf3Formula formula;
    Graph graph;
    VertexSet query;
    std::uint64_t block_size = 0;  ///< M
    double b1 = 0.0;
    double b2 = 0.0;
    bool uses_default_block_size = true; ///< false when M was overridden
    std::vector<ClauseGadget> gadgets;
    std::vector<PartialAssignment> assignment_of; ///< indexed by s vertex - gadgets[0].s_first

    std::size_t clause_count() const noexcept { return gadgets.size(); }
    /// Threshold on the ordered-pair inefficiency: 2 * (B1 + B2).
    double threshold() const noexcept { return 2.0 * (b1 + b2); }
    const PartialAssignment& assignment(VertexId s_vertex) const;
};

/// 6m^2 + 1.
std::uint64_t default_block_size(std::size_t clause_count);

ReductionInstance reduce_3sat(const Cnf3Formula& phi,
                              std::optional<std::uint64_t> block_override = std::nullopt);

/// Q plus, for each clause, the assignment vertex matching `f`. Throws
/// InputError naming the first clause `f` falsifies.
VertexSet solution_from_assignment(const ReductionInstance& inst, const Assignment& f);

/// First satisfying assignment in binary counting order, if any.
std::optional<Assignment> brute_force_sat(const Cnf3Formula& phi);

inline constexpr std::size_t kMaxVerifiedClauses = 3;

struct ReductionVerification {
    std::size_t clause_count = 0;
    std::uint64_t block_size = 0;
    std::size_t vertex_count = 0;
    double b1 = 0.0;
    double b2 = 0.0;
    double threshold = 0.0;
    bool satisfiable = false;
    std::optional<Assignment> witness;
    double min_inefficiency = 0.0;
    VertexSet best_solution;
    bool below_threshold = false;
    /// satisfiable == below_threshold
    bool equivalence_holds = false;
};

/// Runs brute-force SAT and an exhaustive search over the 7m assignment
/// vertices and compares both against the threshold. Refuses (CapExceededError)
/// when m > kMaxVerifiedClauses.
ReductionVerification verify_reduction(const Cnf3Formula& phi,
                                       std::optional<std::uint64_t> block_override = std::nullopt,
                                       unsigned workers = 1);

} // namespace selcon
