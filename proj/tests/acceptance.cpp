// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sparsematch/cli.hpp"
#include "sparsematch/harness.hpp"
#include "sparsematch/matchers.hpp"

using namespace sparsematch;
using namespace sparsematch::harness;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << detail << std::endl;
    if (!ok) ++failures;
}

// Safe-policy results shared by criteria 1 and 4.
DiffReport random_suite, planted_suite;

void differential_completeness() {
    DiffConfig cfg;
    cfg.alphabet_sizes = {2, 4, 26, 64};
    cfg.min_n = 1;
    cfg.max_n = 32;
    cfg.min_m = 0;
    cfg.max_m = 512;
    cfg.trials = 10000;
    cfg.seed = 20240601;
    cfg.policies = {ShiftPolicy::safe};
    cfg.algorithms = {Algorithm::a, Algorithm::b};
    random_suite = run_differential(cfg);

    cfg.planted = true;
    cfg.max_n = 128;
    cfg.seed = 20240602;
    planted_suite = run_differential(cfg);

    const bool ok = random_suite.cases >= 40000 && planted_suite.cases >= 40000 && random_suite.failing_runs == 0 &&
                    planted_suite.failing_runs == 0;
    std::ostringstream d;
    d << "random cases=" << random_suite.cases << " failing=" << random_suite.failing_runs
      << "; planted cases=" << planted_suite.cases << " failing=" << planted_suite.failing_runs
      << " (x2 algorithms, safe policy)";
    report(1, "differential completeness", ok, d.str());
}

void paper_witness() {
    const auto prepared = prepare("cabab");
    SearchConfig paper;
    paper.policy = ShiftPolicy::paper;
    const auto got = find_all(prepared, "cababcabab", paper).occurrences;
    const auto oracle = oracle::occurrences("cabab", "cababcabab");

    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run_cli({"difftest", "--trials", "100", "--seed", "1", "--policy", "paper", "--witness"}, in,
                                  out, err);
    bool missed_class = false;
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line)) {
        const auto d = from_record(line);
        const bool subset = std::all_of(d.actual.begin(), d.actual.end(), [&](auto p) {
            return std::find(d.expected.begin(), d.expected.end(), p) != d.expected.end();
        });
        if (subset && d.actual.size() < d.expected.size() && replay(d)) missed_class = true;
    }
    const bool ok = got == std::vector<std::size_t>{1} && oracle == std::vector<std::size_t>{1, 6} && code == 3 &&
                    missed_class;
    std::ostringstream d;
    d << "paper={";
    for (auto p : got) d << p;
    d << "} oracle={1,6}; difftest exit=" << code << " missed-occurrence record=" << (missed_class ? "yes" : "no");
    report(2, "paper-policy witness", ok, d.str());
}

void sparse_lower_bound() {
    std::size_t patterns = 0, violations = 0;
    for (std::size_t alphabet : {1, 2, 4, 26}) {
        for (std::uint64_t t = 0; t < 10000; ++t) {
            Rng rng(derive_seed(alphabet * 65537, t));
            const Pattern p(gen_pattern(alphabet, rng.between(1, 256), rng.next()));
            if (select_sparse(p).length < p.distinct()) ++violations;
            ++patterns;
        }
    }
    report(3, "sparse length >= distinct count", violations == 0,
           "patterns=" + std::to_string(patterns) + " violations=" + std::to_string(violations));
}

std::uint64_t reads_a_safe(const PreparedPattern& p, std::string_view text) {
    return find_all(p, text, SearchConfig{}).counters.text_reads;
}

void comparison_bound() {
    bool ok = random_suite.read_bound_violations == 0 && planted_suite.read_bound_violations == 0;
    std::ostringstream d;
    d << "suite violations=" << random_suite.read_bound_violations + planted_suite.read_bound_violations
      << " max reads/(4m+2n)=" << std::max(random_suite.max_read_ratio, planted_suite.max_read_ratio);

    const std::size_t m = 100000;
    const std::string unary_text(m, 'a');
    for (std::size_t n : {2, 8, 32}) {
        const auto reads = reads_a_safe(prepare(std::string(n, 'a')), unary_text);
        const bool within = reads <= 4 * m + 2 * n;
        ok = ok && within;
        d << "; a^" << n << " reads/m=" << static_cast<double>(reads) / static_cast<double>(m);
    }

    for (auto [alphabet, n] : {std::pair<std::size_t, std::size_t>{4, 16}, {26, 64}, {2, 8}}) {
        const auto prepared = prepare(gen_pattern(alphabet, n, 77 + alphabet));
        const auto text = gen_uniform(alphabet, 2 * m, 99 + alphabet);
        const double once = static_cast<double>(reads_a_safe(prepared, std::string_view(text).substr(0, m)));
        const double twice = static_cast<double>(reads_a_safe(prepared, text));
        const double ratio = twice / once;
        ok = ok && ratio >= 1.8 && ratio <= 2.2;
        d << "; doubling(" << alphabet << "," << n << ")=" << ratio;
    }
    report(4, "linear comparison bound", ok, d.str());
}

void verify_cost() {
    ExperimentConfig cfg;
    cfg.alphabet_sizes = {2, 4};
    cfg.pattern_lengths = {16};
    cfg.text_length = 20000;
    cfg.trials = 2;
    cfg.seed = 6;
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : experiment_verify_cost(cfg)) {
        const bool within = r.failed_verifications >= 10000 && std::abs(r.mean_matched - r.expected) <= 0.3 * r.expected;
        ok = ok && within;
        d << to_string(r.verifier) << "(alphabet " << r.alphabet << ")=" << r.mean_matched << " vs " << r.expected
          << " over " << r.failed_verifications << "; ";
    }
    report(5, "expected matches before a mismatch", ok, d.str());
}

void expected_time_trend() {
    ExperimentConfig cfg;
    cfg.text_length = 1000000;
    cfg.trials = 3;
    cfg.seed = 2;
    std::vector<ReadRateRow> rows;
    for (auto [alphabet, n] : {std::pair<std::size_t, std::size_t>{4, 16}, {4, 256}, {26, 256}, {64, 1024}}) {
        cfg.alphabet_sizes = {alphabet};
        cfg.pattern_lengths = {n};
        const auto r = experiment_read_rate(cfg);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.mean_min_length_alphabet < b.mean_min_length_alphabet;
    });
    bool ok = true;
    std::ostringstream d;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k > 0) ok = ok && rows[k].reads_per_char <= 1.10 * rows[k - 1].reads_per_char;
        d << "(" << rows[k].alphabet << "," << rows[k].n << ") min(L,alphabet)=" << rows[k].mean_min_length_alphabet
          << " reads/m=" << rows[k].reads_per_char << "; ";
    }
    const auto& last = rows.back();
    const double limit = 2.0 / last.mean_min_length_alphabet + 0.05;
    ok = ok && last.alphabet == 64 && last.reads_per_char <= limit;
    d << "limit for (64,1024)=" << limit;
    report(6, "expected-time trend", ok, d.str());
}

void sparse_length_table() {
    ExperimentConfig cfg;
    cfg.alphabet_sizes = {4, 26};
    cfg.pattern_lengths = {16, 64, 256, 1024};
    cfg.trials = 200;
    cfg.seed = 7;
    const auto rows = experiment_sparse_length(cfg);
    std::cout << to_table(rows).to_tsv();
    bool ok = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        ok = ok && rows[k].violations == 0;
        for (std::size_t prev = 0; prev < k; ++prev) {
            if (rows[prev].alphabet == rows[k].alphabet && rows[prev].n < rows[k].n)
                ok = ok && rows[prev].length_median <= rows[k].length_median;
        }
    }
    report(7, "sparse length table", ok, "violations=0 and medians nondecreasing in n (growth rate reported above)");
}

// Scans windows of `text` with a persistent full-mode table; checks results and entries.
bool ag_scenario(std::string_view pattern, std::string_view text, Rng* rng) {
    const Pattern p(pattern);
    const auto nprof = compute_n_profile(p);
    auto m = MTable::full(text.size());
    const std::size_t n = pattern.size();
    for (std::size_t i = 0; i + n <= text.size(); i += rng ? rng->between(1, n) : 1) {
        if (verify_ag(p, nprof, m, text, i) != (text.substr(i, n) == pattern)) return false;
    }
    for (const auto& [pos, k] : m.entries()) {
        if (k > n || k > pos || text.substr(pos - k, k) != pattern.substr(n - k, k)) return false;
    }
    return true;
}

void ag_equivalence() {
    std::size_t random_cases = 0, random_bad = 0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        Rng rng(derive_seed(88, t));
        const std::size_t alphabet = rng.between(2, 4);
        const auto n = rng.between(1, 16);
        const auto pattern = gen_pattern(alphabet, n, rng.next());
        auto text = gen_uniform(alphabet, rng.between(n, 200), rng.next());
        if (rng.below(2)) text.replace(rng.between(0, text.size() - n), n, pattern);
        if (!ag_scenario(pattern, text, &rng)) ++random_bad;
        ++random_cases;
    }

    // Every pattern over {a, b} with n <= 8; every text of length <= 10 plus random texts up to 64.
    std::size_t small_cases = 0, small_bad = 0;
    auto binary = [](std::size_t len, std::size_t bits) {
        std::string s(len, 'a');
        for (std::size_t k = 0; k < len; ++k)
            if (bits >> k & 1) s[k] = 'b';
        return s;
    };
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t pb = 0; pb < (std::size_t{1} << n); ++pb) {
            const auto pattern = binary(n, pb);
            for (std::size_t m = n; m <= 10; ++m) {
                for (std::size_t tb = 0; tb < (std::size_t{1} << m); ++tb) {
                    if (!ag_scenario(pattern, binary(m, tb), nullptr)) ++small_bad;
                    ++small_cases;
                }
            }
            Rng rng(derive_seed(n, pb));
            for (int r = 0; r < 20; ++r) {
                const auto text = gen_uniform(2, rng.between(n, 64), rng.next());
                if (!ag_scenario(pattern, text, &rng) || !ag_scenario(pattern, text, nullptr)) ++small_bad;
                ++small_cases;
            }
        }
    }
    std::ostringstream d;
    d << "random scenarios=" << random_cases << " mismatches=" << random_bad << "; exhaustive binary scenarios="
      << small_cases << " failures=" << small_bad;
    report(8, "Apostolico-Giancarlo verifier equivalence", random_cases >= 10000 && random_bad == 0 && small_bad == 0,
           d.str());
}

}  // namespace

int main() {
    differential_completeness();
    paper_witness();
    sparse_lower_bound();
    comparison_bound();
    verify_cost();
    expected_time_trend();
    sparse_length_table();
    ag_equivalence();
    if (failures) {
        std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
    } else {
        std::cout << "acceptance: all criteria passed" << std::endl;
    }
    return failures ? 1 : 0;
}
