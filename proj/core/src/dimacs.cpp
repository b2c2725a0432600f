#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "selcon/errors.hpp"
#include "selcon/hardness.hpp"

namespace selcon {

Cnf3Formula parse_dimacs(std::istream& in) {
    Cnf3Formula phi;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<long> pending;
    std::string line;
    for (std::size_t line_number = 1; std::getline(in, line); ++line_number) {
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first == "c" || first.front() == 'c') {
            continue;
        }
        if (first == "%") {
            break;
        }
        if (first == "p") {
            std::string format;
            long vars = -1;
            long clauses = -1;
            if (!(tokens >> format >> vars >> clauses) || format != "cnf" || vars < 0 ||
                clauses < 0) {
                throw InputError("line " + std::to_string(line_number) +
                                 ": malformed header, expected 'p cnf <vars> <clauses>'");
            }
            phi.variable_count = static_cast<std::uint32_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw InputError("line " + std::to_string(line_number) + ": clause before 'p cnf' header");
        }
        tokens.clear();
        tokens.str(line);
        for (std::string tok; tokens >> tok;) {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') {
                throw InputError("line " + std::to_string(line_number) + ": bad literal '" + tok + "'");
            }
            if (lit != 0) {
                if (std::labs(lit) > static_cast<long>(phi.variable_count)) {
                    throw InputError("line " + std::to_string(line_number) + ": variable " +
                                     std::to_string(std::labs(lit)) + " exceeds declared count");
                }
                pending.push_back(lit);
                continue;
            }
            if (pending.size() != 3) {
                throw InputError("clause " + std::to_string(phi.clauses.size() + 1) + " has " +
                                 std::to_string(pending.size()) + " literals, expected 3");
            }
            Clause3 clause;
            for (std::size_t l = 0; l < 3; ++l) {
                clause[l] = {static_cast<std::uint32_t>(std::labs(pending[l]) - 1), pending[l] > 0};
            }
            phi.clauses.push_back(clause);
            pending.clear();
        }
    }
    if (!have_header) {
        throw InputError("missing 'p cnf' header");
    }
    if (!pending.empty()) {
        throw InputError("last clause is not terminated by 0");
    }
    if (phi.clauses.size() != declared_clauses) {
        throw InputError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    }
    phi.validate();
    return phi;
}

Cnf3Formula parse_dimacs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open CNF file '" + path.string() + "'");
    }
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Cnf3Formula& phi) {
    out << "p cnf " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
    for (const auto& clause : phi.clauses) {
        for (const auto& lit : clause) {
            const long v = static_cast<long>(lit.variable) + 1;
            out << (lit.positive ? v : -v) << ' ';
        }
        out << "0\n";
    }
}

} // namespace selcon
