#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace selcon::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kCapExceeded = 3,
};

/// Runs the selcon command line (arguments without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ConnectArgs {
    std::string graph;
    std::string query;
    std::string algorithm = "gra_mis";
    std::string format = "json";
    std::string out;
    std::optional<std::size_t> cap;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool trace = false;
    bool timing = false;
};

struct BenchArgs {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    bool timing = false;
};

struct ReduceArgs {
    std::string cnf;
    std::string out;
    std::optional<std::uint64_t> block_override;
    bool verify = false;
    unsigned workers = 1;
};

int cmd_connect(const ConnectArgs& a, std::ostream& out);
int cmd_bench(const BenchArgs& a, std::ostream& out);
int cmd_reduce(const ReduceArgs& a, std::ostream& out);

/// Writes `text` to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback);

} // namespace selcon::cli
