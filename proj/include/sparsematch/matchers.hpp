#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sparsematch/metrics.hpp"
#include "sparsematch/pattern.hpp"
#include "sparsematch/random.hpp"
#include "sparsematch/sparse.hpp"

namespace sparsematch {

enum class Algorithm { a, b, naive, horspool };

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/**
 * Suffix-match lengths recorded at text positions (1-based).
 *
 * get(j) = k > 0 means T[j-k+1..j] equals the last k bytes of the pattern.
 * Ring mode keeps only the last `capacity` positions, which is all a verifier
 * ever consults for a window of that length; full mode keeps every position.
 */
class MTable {
  public:
    enum class Mode { ring, full };

    static MTable ring(std::size_t pattern_length) { return MTable(Mode::ring, pattern_length); }
    static MTable full(std::size_t text_length) { return MTable(Mode::full, text_length + 1); }

    std::size_t get(std::size_t pos) const noexcept {
        if (mode_ == Mode::full) return pos < values_.size() ? values_[pos] : 0;
        const std::size_t slot = pos % values_.size();
        return tags_[slot] == pos ? values_[slot] : 0;
    }

    void set(std::size_t pos, std::size_t k);

    Mode mode() const noexcept { return mode_; }

    /// Recorded (position, length) pairs, ascending by position.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const;

  private:
    MTable(Mode mode, std::size_t size);

    Mode mode_;
    std::vector<std::size_t> values_;
    std::vector<std::size_t> tags_;
};

struct Classification {
    EventKind kind;
    Byte c = 0;  // text byte under endpos
    Byte d = 0;  // text byte under startpos; unread for Type-1
};

/// Inspects the window T[i+1..i+n] at endpos, then (if needed) at startpos.
Classification classify_event(std::string_view text, std::size_t window_start, const SparseModel& s,
                              Counters* counters = nullptr);

/**
 * Apostolico-Giancarlo window check, right to left.
 *
 * Returns whether T[i+1..i+n] equals the pattern. Entries of `m` that fall in
 * the window let the scan jump over text already known to match a pattern
 * suffix; the suffix-match length found here is stored at the window end.
 */
bool verify_ag(const Pattern& p, const NProfile& nprof, MTable& m, std::string_view text,
               std::size_t window_start, Counters* counters = nullptr);

/// Random inspection order for Random-Match; an incremental Fisher-Yates
/// shuffle over a persistent index array.
class InspectionOrder {
  public:
    InspectionOrder(std::size_t n, std::uint64_t seed);

    std::size_t size() const noexcept { return perm_.size(); }
    /// Draws the k-th offset (1-based pattern position) of a fresh permutation; k counts from 0.
    std::size_t draw(std::size_t k);

  private:
    Rng rng_;
    std::vector<std::size_t> perm_;
};

bool verify_random(const Pattern& p, std::string_view text, std::size_t window_start, InspectionOrder& order,
                   Counters* counters = nullptr);

struct SearchConfig {
    Algorithm algorithm = Algorithm::a;
    ShiftPolicy policy = ShiftPolicy::safe;
    std::uint64_t seed = 0;
    bool collect_counters = true;
    MTable::Mode mtable = MTable::Mode::ring;
};

struct MatchReport {
    /// Ascending 1-based start positions.
    std::vector<std::size_t> occurrences;
    Counters counters;
    Algorithm algorithm = Algorithm::a;
    ShiftPolicy policy = ShiftPolicy::safe;
    std::uint64_t seed = 0;
    /// Set for paper-policy sparse searches: reproduction mode, known incomplete.
    bool reproduction_mode = false;
};

/// Algorithms A and B. `tables.policy` decides the shifts; config.algorithm picks the verifier.
MatchReport search(const Pattern& p, const NProfile& nprof, const SparseModel& s, const ShiftTables& tables,
                   std::string_view text, const SearchConfig& config);

MatchReport naive_search(const Pattern& p, std::string_view text, bool collect_counters = true);
MatchReport horspool_search(const Pattern& p, std::string_view text, bool collect_counters = true);

/// Pattern-side preprocessing for every algorithm; immutable and shareable.
struct PreparedPattern {
    Pattern pattern;
    NProfile nprof;
    SparseModel sparse;
    ShiftTables paper;
    ShiftTables safe;

    const ShiftTables& tables(ShiftPolicy policy) const noexcept {
        return policy == ShiftPolicy::paper ? paper : safe;
    }
};

PreparedPattern prepare(std::string_view pattern);

/// Dispatches on config.algorithm.
MatchReport find_all(const PreparedPattern& prepared, std::string_view text, const SearchConfig& config);

}  // namespace sparsematch
