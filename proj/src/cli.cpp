#include "sparsematch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsematch/harness.hpp"
#include "sparsematch/matchers.hpp"

namespace sparsematch::cli {

namespace {

constexpr std::uint64_t kDefaultMaxSize = std::uint64_t(1) << 30;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SPARSEMATCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("SPARSEMATCH_SEED is not an unsigned integer");
        }
    }
    return 0;
}

struct PatternArgs {
    std::string text;
    std::string hex;
    CLI::Option* text_opt = nullptr;
    CLI::Option* hex_opt = nullptr;

    void add(CLI::App& app) {
        text_opt = app.add_option("--pattern", text, "Pattern bytes");
        hex_opt = app.add_option("--pattern-hex", hex, "Pattern as hex");
        text_opt->excludes(hex_opt);
    }

    std::string resolve() const {
        if (text_opt->count() == 0 && hex_opt->count() == 0) throw UsageError("one of --pattern or --pattern-hex is required");
        std::string bytes = text_opt->count() ? text : harness::from_hex(hex);
        if (bytes.empty()) throw UsageError("empty pattern");
        return bytes;
    }
};

std::string read_input(const std::string& file, std::istream& in, std::uint64_t max_size) {
    std::string data;
    if (file.empty() || file == "-") {
        data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::error_code ec;
        const auto size = std::filesystem::file_size(file, ec);
        if (ec) throw std::runtime_error("cannot read " + file + ": " + ec.message());
        if (size > max_size) throw std::runtime_error(file + " exceeds the size limit of " + std::to_string(max_size) + " bytes");
        std::ifstream stream(file, std::ios::binary);
        if (!stream) throw std::runtime_error("cannot open " + file);
        data.assign(std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>());
    }
    if (data.size() > max_size) throw std::runtime_error("input exceeds the size limit of " + std::to_string(max_size) + " bytes");
    return data;
}

nlohmann::ordered_json shift_map(const PreparedPattern& prepared, const std::array<std::size_t, kAlphabet>& table) {
    nlohmann::ordered_json present = nlohmann::ordered_json::object();
    for (Byte c : prepared.pattern.alphabet()) present[harness::to_hex(std::string(1, static_cast<char>(c)))] = table[c];
    std::size_t absent = 0;
    for (std::size_t c = 0; c < kAlphabet; ++c) {
        if (!prepared.pattern.contains(static_cast<Byte>(c))) {
            absent = table[c];
            break;
        }
    }
    nlohmann::ordered_json j;
    j["present"] = present;
    if (prepared.pattern.distinct() < kAlphabet) j["absent"] = absent;
    return j;
}

std::string byte_hex(Byte b) { return harness::to_hex(std::string(1, static_cast<char>(b))); }

nlohmann::ordered_json stats_json(const PreparedPattern& prepared) {
    const auto& s = prepared.sparse;
    nlohmann::ordered_json j;
    j["indexing"] = "0-based";
    j["n"] = prepared.pattern.size();
    j["delta"] = prepared.pattern.distinct();
    j["sparse"] = {{"substring_hex", harness::to_hex(s.substring(prepared.pattern))},
                   {"startpos", s.startpos - 1},
                   {"endpos", s.endpos - 1},
                   {"startc", byte_hex(s.startc)},
                   {"endc", byte_hex(s.endc)},
                   {"length", s.length}};
    nlohmann::ordered_json paper;
    paper["t1"] = shift_map(prepared, prepared.paper.t1);
    paper["t2_equal"] = prepared.paper.t2_equal;
    paper["t2_differ"] = prepared.paper.t2_differ;
    paper["t3"] = prepared.paper.t3;
    j["shift_paper"] = paper;
    nlohmann::ordered_json safe;
    safe["t1"] = shift_map(prepared, prepared.safe.t1);
    safe["t2"] = shift_map(prepared, prepared.safe.t2);
    safe["t3"] = prepared.safe.t3;
    j["shift_safe"] = safe;
    return j;
}

template <typename Parse>
CLI::Option* add_choice(CLI::App& app, const std::string& name, std::string& holder, Parse parse,
                        const std::string& help) {
    return app.add_option(name, holder, help)->check([parse](const std::string& v) -> std::string {
        return parse(v) ? std::string() : "invalid value '" + v + "'";
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse-anchor exact string matching"};
    app.require_subcommand(1);

    // find
    auto* find = app.add_subcommand("find", "Print 0-based offsets of every occurrence");
    PatternArgs find_pattern;
    find_pattern.add(*find);
    std::string algo_name = "a", policy_name = "safe", file;
    std::uint64_t seed = 0, max_size = kDefaultMaxSize;
    bool show_counters = false;
    add_choice(*find, "--algo", algo_name, parse_algorithm, "a|b|naive|horspool");
    add_choice(*find, "--policy", policy_name, parse_policy, "safe|paper");
    auto* find_seed = find->add_option("--seed", seed, "Seed for Algorithm B (default $SPARSEMATCH_SEED or 0)");
    find->add_flag("--counters", show_counters, "Write the counters JSON to stderr");
    find->add_option("--max-size", max_size, "Largest accepted input in bytes");
    find->add_option("file", file, "Input file (stdin when omitted)");

    // stats
    auto* stats = app.add_subcommand("stats", "Print pattern statistics as JSON");
    PatternArgs stats_pattern;
    stats_pattern.add(*stats);

    // bench
    auto* bench = app.add_subcommand("bench", "Run experiments from a JSON config; TSV to stdout");
    std::string config_file;
    bench->add_option("--config", config_file, "Experiment config file")->required();

    // difftest
    auto* difftest = app.add_subcommand("difftest", "Differential test against the naive oracle");
    harness::DiffConfig diff;
    std::string diff_policy = "safe";
    std::vector<std::string> diff_algos;
    bool witness = false;
    difftest->add_option("--trials", diff.trials, "Trials per alphabet size")->required();
    auto* diff_seed = difftest->add_option("--seed", diff.seed, "Base seed (default $SPARSEMATCH_SEED or 0)");
    add_choice(*difftest, "--policy", diff_policy, parse_policy, "safe|paper");
    difftest->add_option("--algo", diff_algos, "Algorithms to check (a, b); repeatable")
        ->check([](const std::string& v) -> std::string {
            return v == "a" || v == "b" ? std::string() : "algorithm must be a or b";
        });
    difftest->add_option("--alphabet", diff.alphabet_sizes, "Alphabet sizes")
        ->check(CLI::Range(std::size_t{1}, kAlphabet));
    difftest->add_option("--min-n", diff.min_n, "Smallest pattern length")->check(CLI::PositiveNumber);
    difftest->add_option("--max-n", diff.max_n, "Largest pattern length")->check(CLI::PositiveNumber);
    difftest->add_option("--min-m", diff.min_m, "Smallest text length");
    difftest->add_option("--max-m", diff.max_m, "Largest text length");
    difftest->add_flag("--planted", diff.planted, "Plant pattern copies into each text");
    difftest->add_flag("--witness", witness, "Also run the cabab/cababcabab case");
    difftest->add_option("--max-reports", diff.max_reports, "Distinct reproductions to print");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (find->parsed()) {
            const auto bytes = find_pattern.resolve();
            const auto prepared = prepare(bytes);
            SearchConfig config;
            config.algorithm = *parse_algorithm(algo_name);
            config.policy = *parse_policy(policy_name);
            config.seed = find_seed->count() ? seed : default_seed();
            config.collect_counters = show_counters;
            const auto text = read_input(file, in, max_size);
            const auto report = find_all(prepared, text, config);
            for (auto pos : report.occurrences) out << pos - 1 << '\n';
            if (report.reproduction_mode) err << "note: paper policy is a reproduction mode and can miss occurrences\n";
            if (show_counters) {
                auto j = snapshot_json(report.counters);
                j["algorithm"] = to_string(report.algorithm);
                j["policy"] = to_string(report.policy);
                j["seed"] = report.seed;
                err << j.dump() << '\n';
            }
            return report.occurrences.empty() ? kExitNotFound : kExitFound;
        }
        if (stats->parsed()) {
            out << stats_json(prepare(stats_pattern.resolve())).dump(2) << '\n';
            return 0;
        }
        if (bench->parsed()) {
            std::ifstream stream(config_file);
            if (!stream) throw std::runtime_error("cannot open " + config_file);
            out << harness::run_bench(nlohmann::json::parse(stream));
            return 0;
        }
        if (difftest->parsed()) {
            if (diff.min_n > diff.max_n || diff.min_m > diff.max_m) throw UsageError("min bounds exceed max bounds");
            if (!diff_seed->count()) diff.seed = default_seed();
            diff.policies = {*parse_policy(diff_policy)};
            if (!diff_algos.empty()) {
                diff.algorithms.clear();
                for (const auto& a : diff_algos) diff.algorithms.push_back(*parse_algorithm(a));
            }
            if (witness) diff.extra_cases.emplace_back("cabab", "cababcabab");
            const auto report = harness::run_differential(diff);
            for (const auto& d : report.discrepancies) out << harness::to_record(d) << '\n';
            err << "cases=" << report.cases << " failing_runs=" << report.failing_runs
                << " distinct=" << report.discrepancies.size() << '\n';
            return report.failing_runs ? kExitDiscrepancy : 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace sparsematch::cli
