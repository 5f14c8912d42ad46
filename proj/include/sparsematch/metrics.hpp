#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace sparsematch {

enum class EventKind : std::uint8_t { type1 = 0, type2 = 1, type3 = 2 };

std::string_view to_string(EventKind kind) noexcept;

/// Per-search instrumentation. Merge is explicit; there is no shared state.
struct Counters {
    std::uint64_t text_reads = 0;
    std::array<std::uint64_t, 3> events{};
    std::uint64_t verifications = 0;
    std::map<std::size_t, std::uint64_t> verification_match_lengths;
    std::map<std::size_t, std::uint64_t> shifts;
    std::uint64_t total_shift = 0;

    void record_read(std::uint64_t count = 1) noexcept { text_reads += count; }
    void record_event(EventKind kind) noexcept { ++events[static_cast<std::size_t>(kind)]; }
    void record_shift(std::size_t s) {
        ++shifts[s];
        total_shift += s;
    }
    void record_verification(std::size_t matched) {
        ++verifications;
        ++verification_match_lengths[matched];
    }

    std::uint64_t event_count(EventKind kind) const noexcept {
        return events[static_cast<std::size_t>(kind)];
    }
    std::uint64_t total_events() const noexcept { return events[0] + events[1] + events[2]; }
    /// total_shift / total events, 0 when no events happened.
    double mean_shift() const noexcept;

    Counters& merge(const Counters& other);

    friend bool operator==(const Counters&, const Counters&) = default;
};

Counters merged(Counters a, const Counters& b);

/// Fixed field order; "mean_shift" is derived and ignored when parsing.
nlohmann::ordered_json snapshot_json(const Counters& c);
Counters counters_from_json(const nlohmann::ordered_json& j);

std::string tsv_header();
std::string tsv_row(const Counters& c);

}  // namespace sparsematch
