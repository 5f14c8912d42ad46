#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsematch {

using Byte = std::uint8_t;
inline constexpr std::size_t kAlphabet = 256;

inline Byte to_byte(char c) noexcept { return static_cast<Byte>(c); }

/// Raised when a pattern is built from an empty byte sequence.
class EmptyPatternError : public std::invalid_argument {
  public:
    EmptyPatternError() : std::invalid_argument("empty pattern") {}
};

/**
 * Immutable byte pattern with per-byte occurrence lists.
 *
 * Positions are 1-based throughout the library: at(1) is the first byte and
 * occurrences(c) lists ascending positions in [1, size()].
 */
class Pattern {
  public:
    explicit Pattern(std::string_view bytes);

    std::size_t size() const noexcept { return bytes_.size(); }
    std::size_t distinct() const noexcept { return delta_; }
    std::string_view bytes() const noexcept { return bytes_; }

    Byte at(std::size_t pos) const noexcept { return to_byte(bytes_[pos - 1]); }

    std::span<const std::size_t> occurrences(Byte c) const noexcept { return occ_[c]; }
    bool contains(Byte c) const noexcept { return !occ_[c].empty(); }

    /// Bytes present in the pattern, ascending.
    const std::vector<Byte>& alphabet() const noexcept { return present_; }

  private:
    std::string bytes_;
    std::size_t delta_ = 0;
    std::array<std::vector<std::size_t>, kAlphabet> occ_;
    std::vector<Byte> present_;
};

Pattern build_pattern(std::string_view bytes);

/// values()[i - 1] is the length of the longest suffix of P[1..i] that is also a suffix of P.
class NProfile {
  public:
    explicit NProfile(std::vector<std::size_t> values) : values_(std::move(values)) {}

    std::size_t operator()(std::size_t i) const noexcept { return values_[i - 1]; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::size_t>& values() const noexcept { return values_; }

  private:
    std::vector<std::size_t> values_;
};

/// Z array of `s`: z[k] is the longest common prefix of s and s[k..], with z[0] = |s|.
std::vector<std::size_t> z_array(std::string_view s);

NProfile compute_n_profile(const Pattern& p);

}  // namespace sparsematch
