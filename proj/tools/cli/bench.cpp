#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cli/cli.hpp"
#include "selcon/connectors.hpp"
#include "selcon/edge_list.hpp"
#include "selcon/errors.hpp"
#include "selcon/querygen.hpp"
#include "selcon/report.hpp"

namespace selcon::cli {
namespace {

namespace pt = boost::property_tree;

struct Setup {
    std::size_t communities;
    std::size_t size;
    double p_in;
    double p_out;
    std::size_t n;
    std::size_t m;
    std::size_t k;
};

struct Config {
    std::vector<Setup> setups;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
    bool exhaustive = true;
    std::size_t cap = kDefaultExhaustiveCap;
    unsigned workers = 1;
};

template <typename T>
std::vector<T> parse_list(const pt::ptree& tree, const std::string& key, std::vector<T> fallback) {
    auto raw = tree.get_optional<std::string>(key);
    if (!raw) {
        return fallback;
    }
    std::vector<T> values;
    for (const auto& token : split_tokens(*raw)) {
        std::istringstream in(token);
        T x{};
        if (!(in >> x) || !in.eof()) {
            throw InputError("config key '" + key + "': bad value '" + token + "'");
        }
        values.push_back(x);
    }
    if (values.empty()) {
        throw InputError("config key '" + key + "' is empty");
    }
    return values;
}

template <typename T>
T parse_one(const pt::ptree& tree, const std::string& key, T fallback) {
    auto values = parse_list<T>(tree, key, {fallback});
    if (values.size() != 1) {
        throw InputError("config key '" + key + "' takes a single value");
    }
    return values.front();
}

Config read_config(const std::string& path) {
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        throw InputError("malformed config: " + std::string(e.what()));
    }
    static const std::set<std::string> known{
        "graph.communities", "graph.size", "graph.p_in", "graph.p_out", "query.n", "query.m",
        "query.k", "run.repetitions", "run.seed", "run.exhaustive", "run.cap", "run.workers"};
    for (const auto& [section, body] : tree) {
        if (!body.data().empty()) {
            throw InputError("malformed config: key '" + section + "' outside a section");
        }
        for (const auto& [key, _] : body) {
            if (!known.contains(section + "." + key)) {
                throw InputError("malformed config: unknown key '" + section + "." + key + "'");
            }
        }
    }

    Config c;
    const auto cs = parse_list<std::size_t>(tree, "graph.communities", {4});
    const auto sizes = parse_list<std::size_t>(tree, "graph.size", {50});
    const auto p_ins = parse_list<double>(tree, "graph.p_in", {0.3});
    const auto p_outs = parse_list<double>(tree, "graph.p_out", {0.01});
    const auto ns = parse_list<std::size_t>(tree, "query.n", {5});
    const auto ms = parse_list<std::size_t>(tree, "query.m", {2});
    const auto ks = parse_list<std::size_t>(tree, "query.k", {1});
    c.repetitions = parse_one<std::size_t>(tree, "run.repetitions", 10);
    c.seed = parse_one<std::uint64_t>(tree, "run.seed", 0);
    c.exhaustive = parse_one<int>(tree, "run.exhaustive", 1) != 0;
    c.cap = parse_one<std::size_t>(tree, "run.cap", kDefaultExhaustiveCap);
    c.workers = parse_one<unsigned>(tree, "run.workers", 1);
    if (c.workers == 0) {
        throw InputError("config key 'run.workers' must be positive");
    }

    for (auto cc : cs) {
        for (auto size : sizes) {
            for (auto p_in : p_ins) {
                for (auto p_out : p_outs) {
                    for (auto n : ns) {
                        for (auto m : ms) {
                            for (auto k : ks) {
                                if (m == 0 ? k != ks.front() : k > m || k == 0) {
                                    continue;
                                }
                                c.setups.push_back({cc, size, p_in, p_out, n, m, m == 0 ? 0 : k});
                            }
                        }
                    }
                }
            }
        }
    }
    if (c.setups.empty() || c.repetitions == 0) {
        throw InputError("config grid has no valid (n, m, k) combination");
    }
    return c;
}

struct RunResult {
    Setup setup;
    std::uint64_t seed = 0;
    SolutionReport report;
    std::optional<double> exhaustive;
    std::string bucket;
};

bool same_cost(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

RunResult run_one(const Setup& s, std::uint64_t seed, const Config& c, bool timing) {
    RunResult r{s, seed, {}, std::nullopt, "skipped"};
    const auto pp = planted_partition(s.communities, s.size, s.p_in, s.p_out, derive_seed(seed, 0));
    const auto query = generate_query(pp.graph, pp.communities, {s.n, s.m, s.k, derive_seed(seed, 1)});

    const auto start = std::chrono::steady_clock::now();
    const auto seed_set = mwc_connector(pp.graph, query);
    const auto greedy = greedy_relax(pp.graph, seed_set, query);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    r.report = solution_stats(pp.graph, query, greedy.solution);
    if (timing) {
        r.report.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    if (c.exhaustive && seed_set.size() - query.size() <= c.cap) {
        const auto best = exhaustive_relax(pp.graph, seed_set, query, {c.cap, 1});
        r.exhaustive = subgraph_inefficiency(pp.graph, best);
        const double g = r.report.inefficiency;
        r.bucket = same_cost(g, *r.exhaustive) ? "equal" : (g < *r.exhaustive ? "greedy_better" : "greedy_worse");
    }
    return r;
}

} // namespace

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    Config c = read_config(a.config);
    if (a.seed) {
        c.seed = *a.seed;
    }
    if (a.workers) {
        c.workers = *a.workers;
    }

    const std::size_t total = c.setups.size() * c.repetitions;
    std::vector<RunResult> results(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            try {
                results[i] = run_one(c.setups[i / c.repetitions], derive_seed(c.seed, i), c, a.timing);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < std::min<std::size_t>(c.workers, total); ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    std::ostringstream csv;
    auto header = report_csv_header();
    header.insert(header.begin(), {"run", "communities", "size", "p_in", "p_out", "n", "m", "k", "seed"});
    header.insert(header.end(), {"exhaustive_inefficiency", "bucket"});
    write_csv_row(csv, header);
    std::vector<SolutionReport> reports;
    double exhaustive_sum = 0.0;
    std::size_t exhaustive_count = 0;
    std::map<std::string, std::size_t> buckets{{"equal", 0}, {"greedy_better", 0}, {"greedy_worse", 0}};
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const auto& r = results[i];
        const auto& s = r.setup;
        std::vector<std::string> row{std::to_string(i),           std::to_string(s.communities),
                                     std::to_string(s.size),      format_number(s.p_in),
                                     format_number(s.p_out),      std::to_string(s.n),
                                     std::to_string(s.m),         std::to_string(s.k),
                                     std::to_string(r.seed)};
        auto fields = report_csv_fields(r.report);
        row.insert(row.end(), fields.begin(), fields.end());
        row.push_back(r.exhaustive ? format_number(*r.exhaustive) : "");
        row.push_back(r.bucket);
        write_csv_row(csv, row);
        reports.push_back(r.report);
        if (r.exhaustive) {
            exhaustive_sum += *r.exhaustive;
            ++exhaustive_count;
            ++buckets[r.bucket];
        } else {
            ++skipped;
        }
    }
    std::vector<std::string> mean_row{"mean", "", "", "", "", "", "", "", ""};
    auto means = report_csv_fields(mean_of(reports));
    mean_row.insert(mean_row.end(), means.begin(), means.end());
    mean_row.push_back(exhaustive_count ? format_number(exhaustive_sum / static_cast<double>(exhaustive_count)) : "");
    mean_row.push_back("");
    write_csv_row(csv, mean_row);

    csv << '\n';
    write_csv_row(csv, {"bucket", "count", "fraction"});
    for (const char* name : {"equal", "greedy_better", "greedy_worse"}) {
        const double fraction = exhaustive_count == 0 ? 0.0
                                                      : static_cast<double>(buckets[name]) /
                                                            static_cast<double>(exhaustive_count);
        write_csv_row(csv, {name, std::to_string(buckets[name]), format_number(fraction)});
    }
    write_csv_row(csv, {"skipped", std::to_string(skipped), ""});
    emit(a.out, csv.str(), out);
    return kOk;
}

} // namespace selcon::cli
