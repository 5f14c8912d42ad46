#include "sparsematch/metrics.hpp"

#include <sstream>

namespace sparsematch {

std::string_view to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::type1: return "type1";
        case EventKind::type2: return "type2";
        case EventKind::type3: return "type3";
    }
    return "unknown";
}

double Counters::mean_shift() const noexcept {
    const auto n = total_events();
    return n == 0 ? 0.0 : static_cast<double>(total_shift) / static_cast<double>(n);
}

Counters& Counters::merge(const Counters& other) {
    text_reads += other.text_reads;
    for (std::size_t k = 0; k < events.size(); ++k) events[k] += other.events[k];
    verifications += other.verifications;
    for (const auto& [len, count] : other.verification_match_lengths) verification_match_lengths[len] += count;
    for (const auto& [s, count] : other.shifts) shifts[s] += count;
    total_shift += other.total_shift;
    return *this;
}

Counters merged(Counters a, const Counters& b) { return a.merge(b); }

namespace {

nlohmann::ordered_json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [key, count] : h) out[std::to_string(key)] = count;
    return out;
}

std::map<std::size_t, std::uint64_t> histogram_from(const nlohmann::ordered_json& j) {
    std::map<std::size_t, std::uint64_t> h;
    for (const auto& [key, count] : j.items()) h[std::stoull(key)] = count.get<std::uint64_t>();
    return h;
}

}  // namespace

nlohmann::ordered_json snapshot_json(const Counters& c) {
    nlohmann::ordered_json j;
    j["text_reads"] = c.text_reads;
    j["events"] = {{"type1", c.events[0]}, {"type2", c.events[1]}, {"type3", c.events[2]}};
    j["verifications"] = c.verifications;
    j["verification_match_lengths"] = histogram_json(c.verification_match_lengths);
    j["shifts"] = histogram_json(c.shifts);
    j["total_shift"] = c.total_shift;
    j["mean_shift"] = c.mean_shift();
    return j;
}

Counters counters_from_json(const nlohmann::ordered_json& j) {
    Counters c;
    c.text_reads = j.at("text_reads").get<std::uint64_t>();
    const auto& ev = j.at("events");
    c.events = {ev.at("type1").get<std::uint64_t>(), ev.at("type2").get<std::uint64_t>(),
                ev.at("type3").get<std::uint64_t>()};
    c.verifications = j.at("verifications").get<std::uint64_t>();
    c.verification_match_lengths = histogram_from(j.at("verification_match_lengths"));
    c.shifts = histogram_from(j.at("shifts"));
    c.total_shift = j.at("total_shift").get<std::uint64_t>();
    return c;
}

std::string tsv_header() {
    return "text_reads\ttype1\ttype2\ttype3\tverifications\ttotal_shift\tmean_shift";
}

std::string tsv_row(const Counters& c) {
    std::ostringstream out;
    out << c.text_reads << '\t' << c.events[0] << '\t' << c.events[1] << '\t' << c.events[2] << '\t'
        << c.verifications << '\t' << c.total_shift << '\t' << c.mean_shift();
    return out.str();
}

}  // namespace sparsematch
