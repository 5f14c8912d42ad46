#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "sparsematch/pattern.hpp"

namespace sparsematch {

/// A substring P[startpos..endpos] that starts with u, ends with v and holds
/// neither u nor v strictly inside.
struct SparseCandidate {
    Byte u = 0;
    Byte v = 0;
    std::size_t startpos = 0;
    std::size_t endpos = 0;

    std::size_t length() const noexcept { return endpos - startpos + 1; }
    friend bool operator==(const SparseCandidate&, const SparseCandidate&) = default;
};

/// Longer wins; on equal length the larger endpos wins.
bool prefer(const SparseCandidate& a, const SparseCandidate& b) noexcept;

/// The 2-sparse pattern for the ordered pair (u, v), or nullopt if there is none.
/// Both bytes are expected to occur in `p`.
std::optional<SparseCandidate> sparse_for_pair(const Pattern& p, Byte u, Byte v);

struct SparseModel {
    std::size_t startpos = 0;
    std::size_t endpos = 0;
    Byte startc = 0;
    Byte endc = 0;
    std::size_t length = 0;
    std::array<bool, kAlphabet> member{};
    /// Rightmost position of each byte within [startpos, endpos]; 0 when absent.
    std::array<std::size_t, kAlphabet> rightmost_in_sparse{};

    std::string_view substring(const Pattern& p) const noexcept {
        return p.bytes().substr(startpos - 1, length);
    }
};

/// Evaluates every ordered pair of bytes present in `p` and keeps the preferred candidate.
SparseModel select_sparse(const Pattern& p);

enum class ShiftPolicy { paper, safe };

std::string_view to_string(ShiftPolicy policy) noexcept;
std::optional<ShiftPolicy> parse_policy(std::string_view name) noexcept;

/**
 * Window shifts for the three event kinds.
 *
 * Under the safe policy every shift is the smallest advance that does not skip
 * a placement consistent with the text bytes read so far. Under the `paper`
 * policy t1 follows the rightmost-occurrence rule restricted to sparse(P),
 * and Type-2 shifts are L when the two observed bytes are equal and L + 1
 * otherwise; t2 is unused.
 */
struct ShiftTables {
    ShiftPolicy policy = ShiftPolicy::safe;
    std::array<std::size_t, kAlphabet> t1{};
    std::array<std::size_t, kAlphabet> t2{};
    std::size_t t2_equal = 0;
    std::size_t t2_differ = 0;
    std::size_t t3 = 0;

    std::size_t type1(Byte c) const noexcept { return t1[c]; }
    std::size_t type2(Byte c, Byte d) const noexcept {
        if (policy == ShiftPolicy::safe) return t2[d];
        return c == d ? t2_equal : t2_differ;
    }
    std::size_t type3() const noexcept { return t3; }
};

ShiftTables build_shift_tables(const Pattern& p, const SparseModel& s, ShiftPolicy policy);

}  // namespace sparsematch
