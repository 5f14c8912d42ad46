#include "sparsematch/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sparsematch::harness {

std::string gen_uniform(std::size_t alphabet_size, std::size_t length, std::uint64_t seed) {
    if (alphabet_size < 1 || alphabet_size > kAlphabet) throw std::invalid_argument("alphabet size must be in [1, 256]");
    Rng rng(seed);
    std::string out(length, '\0');
    for (auto& ch : out) ch = static_cast<char>(symbol(rng.below(alphabet_size)));
    return out;
}

std::string gen_pattern(std::size_t alphabet_size, std::size_t length, std::uint64_t seed) {
    if (length == 0) throw EmptyPatternError();
    return gen_uniform(alphabet_size, length, seed);
}

std::string to_hex(std::string_view bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (char ch : bytes) {
        const Byte b = to_byte(ch);
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid hex digit");
    };
    std::string out(hex.size() / 2, '\0');
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = static_cast<char>(nibble(hex[2 * k]) << 4 | nibble(hex[2 * k + 1]));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

MatchReport run_one(const PreparedPattern& prepared, std::string_view text, Algorithm algorithm, ShiftPolicy policy,
                    std::uint64_t seed) {
    SearchConfig config;
    config.algorithm = algorithm;
    config.policy = policy;
    config.seed = seed;
    return find_all(prepared, text, config);
}

bool fails(std::string_view pattern, std::string_view text, Algorithm algorithm, ShiftPolicy policy,
           std::uint64_t seed) {
    if (pattern.empty()) return false;
    const auto prepared = prepare(pattern);
    const auto expected = naive_search(prepared.pattern, text, false).occurrences;
    return run_one(prepared, text, algorithm, policy, seed).occurrences != expected;
}

struct Scenario {
    std::string pattern;
    std::string text;
};

Scenario make_scenario(const DiffConfig& cfg, std::size_t alphabet, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const std::size_t n = rng.between(cfg.min_n, cfg.max_n);
    Scenario s;
    s.pattern = gen_pattern(alphabet, n, rng.next());
    if (!cfg.planted) {
        const std::size_t m = rng.between(cfg.min_m, cfg.max_m);
        s.text = gen_uniform(alphabet, m, rng.next());
        return s;
    }
    const std::size_t m = rng.between(std::max(n, cfg.min_m), std::max({n, cfg.min_m, cfg.max_m}));
    s.text = gen_uniform(alphabet, m, rng.next());
    const std::size_t copies = rng.between(1, 3);
    for (std::size_t k = 0; k < copies; ++k) {
        const std::size_t at = rng.between(0, m - n);
        s.text.replace(at, n, s.pattern);
    }
    return s;
}

}  // namespace

DiffReport run_differential(const DiffConfig& cfg) {
    DiffReport report;
    std::set<std::tuple<std::string, std::string, Algorithm, ShiftPolicy>> seen;

    auto check = [&](const std::string& pattern, const std::string& text, std::uint64_t seed) {
        ++report.cases;
        const auto prepared = prepare(pattern);
        const auto expected = naive_search(prepared.pattern, text, false).occurrences;
        for (ShiftPolicy policy : cfg.policies) {
            for (Algorithm algorithm : cfg.algorithms) {
                const auto got = run_one(prepared, text, algorithm, policy, seed);
                if (algorithm == Algorithm::a && policy == ShiftPolicy::safe) {
                    const double bound = 4.0 * static_cast<double>(text.size()) + 2.0 * static_cast<double>(pattern.size());
                    const double reads = static_cast<double>(got.counters.text_reads);
                    if (reads > bound) ++report.read_bound_violations;
                    report.max_read_ratio = std::max(report.max_read_ratio, reads / bound);
                }
                if (got.occurrences == expected) continue;
                ++report.failing_runs;
                if (report.discrepancies.size() >= cfg.max_reports) continue;
                auto d = shrink(Discrepancy{pattern, text, algorithm, policy, seed, expected, got.occurrences});
                if (seen.emplace(d.pattern, d.text, d.algorithm, d.policy).second) {
                    report.discrepancies.push_back(std::move(d));
                }
            }
        }
    };

    for (const auto& [pattern, text] : cfg.extra_cases) check(pattern, text, cfg.seed);

    for (std::size_t a = 0; a < cfg.alphabet_sizes.size(); ++a) {
        const std::size_t alphabet = cfg.alphabet_sizes[a];
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const std::uint64_t trial_seed = derive_seed(cfg.seed, a * cfg.trials + t);
            const auto s = make_scenario(cfg, alphabet, trial_seed);
            check(s.pattern, s.text, trial_seed);
        }
    }
    return report;
}

bool replay(const Discrepancy& d) { return fails(d.pattern, d.text, d.algorithm, d.policy, d.seed); }

Discrepancy shrink(Discrepancy d) {
    auto still_fails = [&](const std::string& p, const std::string& t) {
        return fails(p, t, d.algorithm, d.policy, d.seed);
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = d.text.size(); k-- > 0;) {
            std::string t = d.text;
            t.erase(k, 1);
            if (still_fails(d.pattern, t)) {
                d.text = std::move(t);
                progress = true;
            }
        }
        for (std::size_t k = d.pattern.size(); k-- > 0;) {
            if (d.pattern.size() == 1) break;
            std::string p = d.pattern;
            p.erase(k, 1);
            if (still_fails(p, d.text)) {
                d.pattern = std::move(p);
                progress = true;
            }
        }
    }
    const auto prepared = prepare(d.pattern);
    d.expected = naive_search(prepared.pattern, d.text, false).occurrences;
    d.actual = run_one(prepared, d.text, d.algorithm, d.policy, d.seed).occurrences;
    return d;
}

namespace {

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out(v);
    for (auto& x : out) --x;
    return out;
}

std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
    for (auto& x : v) ++x;
    return v;
}

}  // namespace

std::string to_record(const Discrepancy& d) {
    nlohmann::ordered_json j;
    j["pattern_hex"] = to_hex(d.pattern);
    j["text_hex"] = to_hex(d.text);
    j["algorithm"] = to_string(d.algorithm);
    j["policy"] = to_string(d.policy);
    j["seed"] = d.seed;
    j["expected"] = zero_based(d.expected);
    j["actual"] = zero_based(d.actual);
    return j.dump();
}

Discrepancy from_record(std::string_view line) {
    const auto j = nlohmann::json::parse(line);
    Discrepancy d;
    d.pattern = from_hex(j.at("pattern_hex").get<std::string>());
    d.text = from_hex(j.at("text_hex").get<std::string>());
    const auto algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    const auto policy = parse_policy(j.at("policy").get<std::string>());
    if (!algorithm || !policy) throw std::invalid_argument("bad algorithm or policy in record");
    d.algorithm = *algorithm;
    d.policy = *policy;
    d.seed = j.at("seed").get<std::uint64_t>();
    d.expected = one_based(j.at("expected").get<std::vector<std::size_t>>());
    d.actual = one_based(j.at("actual").get<std::vector<std::size_t>>());
    return d;
}

// ---------------------------------------------------------------------------

void validate(const ExperimentConfig& cfg) {
    if (cfg.alphabet_sizes.empty() || cfg.pattern_lengths.empty() || cfg.policies.empty() || cfg.algorithms.empty())
        throw std::invalid_argument("experiment config lists must be non-empty");
    if (cfg.trials < 1 || cfg.text_length < 1) throw std::invalid_argument("trials and text length must be >= 1");
    for (auto a : cfg.alphabet_sizes)
        if (a < 1 || a > kAlphabet) throw std::invalid_argument("alphabet size must be in [1, 256]");
    for (auto n : cfg.pattern_lengths)
        if (n < 1) throw std::invalid_argument("pattern lengths must be >= 1");
}

std::string Table::to_tsv() const {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "\t" : "") << cells[k];
        out << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return out.str();
}

namespace {

std::string fmt(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << x;
    return out.str();
}

template <typename T>
std::string fmt(T x)
    requires std::integral<T>
{
    return std::to_string(x);
}

template <typename T>
double median(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? static_cast<double>(v[k]) : (static_cast<double>(v[k - 1]) + static_cast<double>(v[k])) / 2.0;
}

template <typename T>
double mean(const std::vector<T>& v) {
    double sum = 0;
    for (const auto& x : v) sum += static_cast<double>(x);
    return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

// Independent seed streams per (experiment row, trial, purpose).
std::uint64_t stream(const ExperimentConfig& cfg, std::size_t alphabet, std::size_t n, std::size_t trial,
                     std::uint64_t purpose) {
    return derive_seed(derive_seed(derive_seed(cfg.seed, alphabet), n), trial * 4 + purpose);
}

}  // namespace

std::vector<SparseLengthRow> experiment_sparse_length(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<SparseLengthRow> rows;
    for (std::size_t n : cfg.pattern_lengths) {
        for (std::size_t alphabet : cfg.alphabet_sizes) {
            std::vector<std::size_t> lengths, deltas;
            std::vector<double> ratios;
            SparseLengthRow row{.n = n, .alphabet = alphabet, .trials = cfg.trials};
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const Pattern p(gen_pattern(alphabet, n, stream(cfg, alphabet, n, t, 0)));
                const auto s = select_sparse(p);
                lengths.push_back(s.length);
                deltas.push_back(p.distinct());
                ratios.push_back(static_cast<double>(s.length) / std::sqrt(static_cast<double>(n)));
                if (s.length < p.distinct()) ++row.violations;
            }
            row.length_min = *std::min_element(lengths.begin(), lengths.end());
            row.length_median = median(lengths);
            row.length_mean = mean(lengths);
            row.delta_min = *std::min_element(deltas.begin(), deltas.end());
            row.delta_median = median(deltas);
            row.delta_mean = mean(deltas);
            row.ratio_median = median(ratios);
            row.ratio_mean = mean(ratios);
            rows.push_back(row);
        }
    }
    return rows;
}

Table to_table(const std::vector<SparseLengthRow>& rows) {
    Table t{{"n", "alphabet", "trials", "L_min", "L_median", "L_mean", "delta_min", "delta_median", "delta_mean",
             "L_over_sqrt_n_median", "L_over_sqrt_n_mean", "violations"},
            {}};
    for (const auto& r : rows) {
        t.rows.push_back({fmt(r.n), fmt(r.alphabet), fmt(r.trials), fmt(r.length_min), fmt(r.length_median),
                          fmt(r.length_mean), fmt(r.delta_min), fmt(r.delta_median), fmt(r.delta_mean),
                          fmt(r.ratio_median), fmt(r.ratio_mean), fmt(r.violations)});
    }
    return t;
}

std::vector<ShiftExpectationRow> experiment_shift_expectation(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<ShiftExpectationRow> rows;
    for (std::size_t n : cfg.pattern_lengths) {
        for (std::size_t alphabet : cfg.alphabet_sizes) {
            for (Algorithm algorithm : cfg.algorithms) {
                for (ShiftPolicy policy : cfg.policies) {
                    ShiftExpectationRow row{.n = n, .alphabet = alphabet, .algorithm = algorithm, .policy = policy,
                                            .trials = cfg.trials};
                    std::array<std::uint64_t, 3> shift_sum{};
                    double length_sum = 0, min_sum = 0;
                    Counters total;
                    for (std::size_t t = 0; t < cfg.trials; ++t) {
                        const auto prepared = prepare(gen_pattern(alphabet, n, stream(cfg, alphabet, n, t, 0)));
                        const auto text = gen_uniform(alphabet, cfg.text_length, stream(cfg, alphabet, n, t, 1));
                        length_sum += static_cast<double>(prepared.sparse.length);
                        min_sum += static_cast<double>(std::min(prepared.sparse.length, alphabet));

                        // Walk the search manually to attribute every applied shift to its event kind.
                        const auto& tables = prepared.tables(policy);
                        const std::size_t m = text.size();
                        if (n > m) continue;
                        MTable mt = MTable::ring(n);
                        InspectionOrder order(n, stream(cfg, alphabet, n, t, 2));
                        std::size_t i = 0;
                        for (;;) {
                            const auto ev = classify_event(text, i, prepared.sparse, &total);
                            std::size_t shift = 0;
                            if (ev.kind == EventKind::type1) {
                                shift = tables.type1(ev.c);
                            } else if (ev.kind == EventKind::type2) {
                                shift = tables.type2(ev.c, ev.d);
                            } else {
                                if (algorithm == Algorithm::b) {
                                    verify_random(prepared.pattern, text, i, order, &total);
                                } else {
                                    verify_ag(prepared.pattern, prepared.nprof, mt, text, i, &total);
                                }
                                shift = tables.type3();
                            }
                            if (i + shift + n > m) break;
                            total.record_event(ev.kind);
                            total.record_shift(shift);
                            shift_sum[static_cast<std::size_t>(ev.kind)] += shift;
                            i += shift;
                        }
                    }
                    row.events = total.events;
                    for (std::size_t k = 0; k < 3; ++k) {
                        row.mean_shift_by_kind[k] =
                            total.events[k] ? static_cast<double>(shift_sum[k]) / static_cast<double>(total.events[k]) : 0.0;
                    }
                    row.mean_shift = total.mean_shift();
                    row.mean_length = length_sum / static_cast<double>(cfg.trials);
                    row.mean_min_length_alphabet = min_sum / static_cast<double>(cfg.trials);
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

Table to_table(const std::vector<ShiftExpectationRow>& rows) {
    Table t{{"n", "alphabet", "algorithm", "policy", "trials", "type1_events", "type2_events", "type3_events",
             "type1_mean_shift", "type2_mean_shift", "type3_mean_shift", "mean_shift", "L_mean", "min_L_alphabet_mean"},
            {}};
    for (const auto& r : rows) {
        t.rows.push_back({fmt(r.n), fmt(r.alphabet), std::string(to_string(r.algorithm)),
                          std::string(to_string(r.policy)), fmt(r.trials), fmt(r.events[0]), fmt(r.events[1]),
                          fmt(r.events[2]), fmt(r.mean_shift_by_kind[0]), fmt(r.mean_shift_by_kind[1]),
                          fmt(r.mean_shift_by_kind[2]), fmt(r.mean_shift), fmt(r.mean_length),
                          fmt(r.mean_min_length_alphabet)});
    }
    return t;
}

std::string_view to_string(Verifier v) noexcept {
    return v == Verifier::apostolico_giancarlo ? "apostolico_giancarlo" : "random_match";
}

std::vector<VerifyCostRow> experiment_verify_cost(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<VerifyCostRow> rows;
    for (std::size_t alphabet : cfg.alphabet_sizes) {
        for (std::size_t n : cfg.pattern_lengths) {
            for (Verifier verifier : {Verifier::apostolico_giancarlo, Verifier::random_match}) {
                VerifyCostRow row{.alphabet = alphabet, .n = n, .verifier = verifier};
                row.expected = alphabet > 1 ? 1.0 / static_cast<double>(alphabet - 1) : 0.0;
                Counters total;
                for (std::size_t t = 0; t < cfg.trials; ++t) {
                    const Pattern p(gen_pattern(alphabet, n, stream(cfg, alphabet, n, t, 0)));
                    const auto text = gen_uniform(alphabet, cfg.text_length, stream(cfg, alphabet, n, t, 1));
                    if (n > text.size()) continue;
                    if (verifier == Verifier::apostolico_giancarlo) {
                        const auto nprof = compute_n_profile(p);
                        MTable mt = MTable::ring(n);
                        for (std::size_t i = 0; i + n <= text.size(); ++i) verify_ag(p, nprof, mt, text, i, &total);
                    } else {
                        InspectionOrder order(n, stream(cfg, alphabet, n, t, 2));
                        for (std::size_t i = 0; i + n <= text.size(); ++i) verify_random(p, text, i, order, &total);
                    }
                }
                double matched = 0;
                for (const auto& [len, count] : total.verification_match_lengths) {
                    if (len == n) continue;
                    row.failed_verifications += count;
                    matched += static_cast<double>(len) * static_cast<double>(count);
                }
                row.mean_matched = row.failed_verifications ? matched / static_cast<double>(row.failed_verifications) : 0.0;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

Table to_table(const std::vector<VerifyCostRow>& rows) {
    Table t{{"alphabet", "n", "verifier", "failed_verifications", "mean_matched", "expected"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({fmt(r.alphabet), fmt(r.n), std::string(to_string(r.verifier)), fmt(r.failed_verifications),
                          fmt(r.mean_matched), fmt(r.expected)});
    }
    return t;
}

std::vector<ReadRateRow> experiment_read_rate(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<ReadRateRow> rows;
    for (std::size_t alphabet : cfg.alphabet_sizes) {
        for (std::size_t n : cfg.pattern_lengths) {
            for (Algorithm algorithm : cfg.algorithms) {
                for (ShiftPolicy policy : cfg.policies) {
                    ReadRateRow row{.alphabet = alphabet, .n = n, .algorithm = algorithm, .policy = policy,
                                    .m = cfg.text_length, .trials = cfg.trials};
                    double reads = 0, length_sum = 0, min_sum = 0;
                    for (std::size_t t = 0; t < cfg.trials; ++t) {
                        const auto prepared = prepare(gen_pattern(alphabet, n, stream(cfg, alphabet, n, t, 0)));
                        const auto text = gen_uniform(alphabet, cfg.text_length, stream(cfg, alphabet, n, t, 1));
                        SearchConfig sc{.algorithm = algorithm, .policy = policy, .seed = stream(cfg, alphabet, n, t, 2)};
                        reads += static_cast<double>(find_all(prepared, text, sc).counters.text_reads);
                        length_sum += static_cast<double>(prepared.sparse.length);
                        min_sum += static_cast<double>(std::min(prepared.sparse.length, alphabet));
                    }
                    const double trials = static_cast<double>(cfg.trials);
                    row.mean_length = length_sum / trials;
                    row.mean_min_length_alphabet = min_sum / trials;
                    row.reads_per_char = reads / (trials * static_cast<double>(cfg.text_length));
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

Table to_table(const std::vector<ReadRateRow>& rows) {
    Table t{{"alphabet", "n", "algorithm", "policy", "m", "trials", "L_mean", "min_L_alphabet_mean", "reads_per_char"},
            {}};
    for (const auto& r : rows) {
        t.rows.push_back({fmt(r.alphabet), fmt(r.n), std::string(to_string(r.algorithm)),
                          std::string(to_string(r.policy)), fmt(r.m), fmt(r.trials), fmt(r.mean_length),
                          fmt(r.mean_min_length_alphabet), fmt(r.reads_per_char)});
    }
    return t;
}

namespace {

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    if (j.contains("alphabet_sizes")) cfg.alphabet_sizes = j["alphabet_sizes"].get<std::vector<std::size_t>>();
    if (j.contains("pattern_lengths")) cfg.pattern_lengths = j["pattern_lengths"].get<std::vector<std::size_t>>();
    if (j.contains("text_length")) cfg.text_length = j["text_length"].get<std::size_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("policies")) {
        cfg.policies.clear();
        for (const auto& name : j["policies"]) {
            auto p = parse_policy(name.get<std::string>());
            if (!p) throw std::invalid_argument("unknown policy: " + name.get<std::string>());
            cfg.policies.push_back(*p);
        }
    }
    if (j.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto& name : j["algorithms"]) {
            auto a = parse_algorithm(name.get<std::string>());
            if (!a) throw std::invalid_argument("unknown algorithm: " + name.get<std::string>());
            cfg.algorithms.push_back(*a);
        }
    }
    validate(cfg);
    return cfg;
}

}  // namespace

std::string run_bench(const nlohmann::json& doc) {
    std::ostringstream out;
    const auto& experiments = doc.at("experiments");
    bool first = true;
    for (const auto& e : experiments) {
        const auto kind = e.at("kind").get<std::string>();
        const auto cfg = config_from_json(e);
        if (!first) out << '\n';
        first = false;
        out << "# " << kind << " seed=" << cfg.seed << '\n';
        if (kind == "sparse_length") {
            out << "# protocol: i.i.d. uniform patterns over the first `alphabet` symbols (chosen protocol)\n";
            out << to_table(experiment_sparse_length(cfg)).to_tsv();
        } else if (kind == "shift_expectation") {
            out << to_table(experiment_shift_expectation(cfg)).to_tsv();
        } else if (kind == "verify_cost") {
            out << to_table(experiment_verify_cost(cfg)).to_tsv();
        } else if (kind == "read_rate") {
            out << to_table(experiment_read_rate(cfg)).to_tsv();
        } else {
            throw std::invalid_argument("unknown experiment kind: " + kind);
        }
    }
    return out.str();
}

}  // namespace sparsematch::harness
