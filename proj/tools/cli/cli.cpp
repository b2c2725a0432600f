#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "selcon/errors.hpp"

namespace selcon::cli {

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"selcon: selective connectors and minimum-inefficiency subgraphs"};
    app.require_subcommand(1);

    ConnectArgs c;
    auto* connect = app.add_subcommand("connect", "Find a selective connector for a query set");
    connect->add_option("--graph", c.graph, "Edge-list file")->required();
    connect->add_option("--query", c.query, "Comma-separated vertices, or a file of vertices")
        ->required();
    connect->add_option("--algo", c.algorithm, "Algorithm")
        ->check(CLI::IsMember({"gra_mis", "exhaustive", "brute", "ctp_seeded"}));
    connect->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    connect->add_option("--out", c.out, "Output file (default stdout)");
    connect->add_option("--cap", c.cap, "Size cap for exhaustive and brute");
    connect->add_option("--seed", c.seed, "Seed (recorded; the algorithms are deterministic)");
    connect->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    connect->add_flag("--trace", c.trace, "Include the relaxation trace");
    connect->add_flag("--timing", c.timing, "Record wall-clock runtime");

    BenchArgs b;
    auto* bench = app.add_subcommand("bench", "Run a planted-partition experiment grid");
    bench->add_option("--config", b.config, "INI configuration")->required();
    bench->add_option("--out", b.out, "Output CSV (default stdout)");
    bench->add_option("--seed", b.seed, "Override the configured seed");
    bench->add_option("--workers", b.workers, "Override the configured worker count")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--timing", b.timing, "Record wall-clock runtime");

    ReduceArgs r;
    auto* reduce = app.add_subcommand("reduce", "Build the 3-SAT hardness instance for a CNF");
    reduce->add_option("--cnf", r.cnf, "DIMACS 3-CNF file")->required();
    reduce->add_option("--out", r.out, "Prefix for PREFIX.edges and PREFIX.query");
    reduce->add_option("--m-override", r.block_override, "Block size M instead of 6m^2+1")
        ->check(CLI::PositiveNumber);
    reduce->add_flag("--verify", r.verify, "Cross-check against brute-force SAT");
    reduce->add_option("--workers", r.workers, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*connect) {
            return cmd_connect(c, out);
        }
        if (*bench) {
            return cmd_bench(b, out);
        }
        return cmd_reduce(r, out);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace selcon::cli
