#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sparsematch/matchers.hpp"

namespace sparsematch::harness {

/// Byte used for symbol k of a generated alphabet: 'a' + k, wrapping mod 256.
constexpr Byte symbol(std::size_t k) noexcept { return static_cast<Byte>((0x61 + k) & 0xff); }

/// `length` symbols drawn independently and uniformly from the first
/// `alphabet_size` symbols. Deterministic in `seed`.
std::string gen_uniform(std::size_t alphabet_size, std::size_t length, std::uint64_t seed);

/// As gen_uniform, but a pattern may not be empty.
std::string gen_pattern(std::size_t alphabet_size, std::size_t length, std::uint64_t seed);

std::string to_hex(std::string_view bytes);
std::string from_hex(std::string_view hex);

// ---------------------------------------------------------------------------
// Differential testing

struct DiffConfig {
    std::vector<std::size_t> alphabet_sizes{2, 4, 26};
    std::size_t min_n = 1;
    std::size_t max_n = 32;
    std::size_t min_m = 0;
    std::size_t max_m = 512;
    /// Trials per alphabet size.
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::vector<ShiftPolicy> policies{ShiftPolicy::safe};
    std::vector<Algorithm> algorithms{Algorithm::a, Algorithm::b};
    /// Embed 1-3 copies of the pattern at random offsets of each text.
    bool planted = false;
    /// Cases run before the random trials.
    std::vector<std::pair<std::string, std::string>> extra_cases;
    /// Distinct shrunk reproductions kept; further failures are only counted.
    std::size_t max_reports = 16;
};

struct Discrepancy {
    std::string pattern;
    std::string text;
    Algorithm algorithm = Algorithm::a;
    ShiftPolicy policy = ShiftPolicy::safe;
    std::uint64_t seed = 0;
    std::vector<std::size_t> expected;  // 1-based, from the naive oracle
    std::vector<std::size_t> actual;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct DiffReport {
    std::size_t cases = 0;
    std::size_t failing_runs = 0;
    std::vector<Discrepancy> discrepancies;
    /// Safe-policy Algorithm A runs exceeding 4m + 2n text reads.
    std::size_t read_bound_violations = 0;
    /// Largest observed reads / (4m + 2n) for safe-policy Algorithm A.
    double max_read_ratio = 0.0;
};

DiffReport run_differential(const DiffConfig& cfg);

/// Re-runs the recorded configuration; true if it still disagrees with the oracle.
bool replay(const Discrepancy& d);

/// Greedy single-byte deletions from text and pattern while the failure persists.
Discrepancy shrink(Discrepancy d);

/// One JSON object per line; byte strings hex-encoded, offsets 0-based.
std::string to_record(const Discrepancy& d);
Discrepancy from_record(std::string_view line);

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentConfig {
    std::vector<std::size_t> alphabet_sizes{4};
    std::vector<std::size_t> pattern_lengths{16};
    std::size_t text_length = 100000;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<ShiftPolicy> policies{ShiftPolicy::safe};
    std::vector<Algorithm> algorithms{Algorithm::a};
};

/// Throws std::invalid_argument on zero counts or alphabet sizes outside [1, 256].
void validate(const ExperimentConfig& cfg);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_tsv() const;
};

struct SparseLengthRow {
    std::size_t n = 0;
    std::size_t alphabet = 0;
    std::size_t trials = 0;
    std::size_t length_min = 0;
    double length_median = 0;
    double length_mean = 0;
    std::size_t delta_min = 0;
    double delta_median = 0;
    double delta_mean = 0;
    double ratio_median = 0;  // median L / sqrt(n)
    double ratio_mean = 0;
    std::size_t violations = 0;  // patterns with L < delta
};

std::vector<SparseLengthRow> experiment_sparse_length(const ExperimentConfig& cfg);
Table to_table(const std::vector<SparseLengthRow>& rows);

struct ShiftExpectationRow {
    std::size_t n = 0;
    std::size_t alphabet = 0;
    Algorithm algorithm = Algorithm::a;
    ShiftPolicy policy = ShiftPolicy::safe;
    std::size_t trials = 0;
    std::array<std::uint64_t, 3> events{};
    std::array<double, 3> mean_shift_by_kind{};
    double mean_shift = 0;
    double mean_length = 0;
    double mean_min_length_alphabet = 0;  // mean of min(L, alphabet)
};

std::vector<ShiftExpectationRow> experiment_shift_expectation(const ExperimentConfig& cfg);
Table to_table(const std::vector<ShiftExpectationRow>& rows);

enum class Verifier { apostolico_giancarlo, random_match };
std::string_view to_string(Verifier v) noexcept;

struct VerifyCostRow {
    std::size_t alphabet = 0;
    std::size_t n = 0;
    Verifier verifier = Verifier::apostolico_giancarlo;
    std::uint64_t failed_verifications = 0;
    double mean_matched = 0;
    double expected = 0;  // 1 / (alphabet - 1)
};

/// Verifies every placement of random patterns over random texts and averages
/// the bytes matched before the mismatch (full matches excluded).
std::vector<VerifyCostRow> experiment_verify_cost(const ExperimentConfig& cfg);
Table to_table(const std::vector<VerifyCostRow>& rows);

struct ReadRateRow {
    std::size_t alphabet = 0;
    std::size_t n = 0;
    Algorithm algorithm = Algorithm::a;
    ShiftPolicy policy = ShiftPolicy::safe;
    std::size_t m = 0;
    std::size_t trials = 0;
    double mean_length = 0;
    double mean_min_length_alphabet = 0;
    double reads_per_char = 0;
};

/// Text reads per text byte on uniform random texts.
std::vector<ReadRateRow> experiment_read_rate(const ExperimentConfig& cfg);
Table to_table(const std::vector<ReadRateRow>& rows);

/// Runs a bench document: {"experiments": [{"kind": ..., <ExperimentConfig fields>}, ...]}.
std::string run_bench(const nlohmann::json& doc);

}  // namespace sparsematch::harness
