#include "sparsematch/matchers.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <utility>

namespace sparsematch {

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
        case Algorithm::a: return "a";
        case Algorithm::b: return "b";
        case Algorithm::naive: return "naive";
        case Algorithm::horspool: return "horspool";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "a") return Algorithm::a;
    if (name == "b") return Algorithm::b;
    if (name == "naive") return Algorithm::naive;
    if (name == "horspool") return Algorithm::horspool;
    return std::nullopt;
}

MTable::MTable(Mode mode, std::size_t size)
    : mode_(mode), values_(std::max<std::size_t>(size, 1), 0) {
    if (mode_ == Mode::ring) tags_.assign(values_.size(), 0);
}

void MTable::set(std::size_t pos, std::size_t k) {
    if (mode_ == Mode::full) {
        if (pos >= values_.size()) values_.resize(pos + 1, 0);
        values_[pos] = k;
        return;
    }
    const std::size_t slot = pos % values_.size();
    tags_[slot] = pos;
    values_[slot] = k;
}

std::vector<std::pair<std::size_t, std::size_t>> MTable::entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t slot = 0; slot < values_.size(); ++slot) {
        if (values_[slot] == 0) continue;
        out.emplace_back(mode_ == Mode::full ? slot : tags_[slot], values_[slot]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Text reads go through here so that every access is counted.
inline Byte read(std::string_view text, std::size_t pos, Counters* counters) {
    if (counters) counters->record_read();
    return to_byte(text[pos - 1]);
}

}  // namespace

Classification classify_event(std::string_view text, std::size_t window_start, const SparseModel& s,
                              Counters* counters) {
    Classification out{EventKind::type1};
    out.c = read(text, window_start + s.endpos, counters);
    if (out.c != s.endc) return out;
    if (s.startpos == s.endpos) {
        out.d = out.c;
        out.kind = EventKind::type3;
        return out;
    }
    out.d = read(text, window_start + s.startpos, counters);
    out.kind = out.d == s.startc ? EventKind::type3 : EventKind::type2;
    return out;
}

bool verify_ag(const Pattern& p, const NProfile& nprof, MTable& m, std::string_view text,
               std::size_t window_start, Counters* counters) {
    const std::size_t n = p.size();
    const std::size_t j = window_start + n;
    std::size_t i = n;
    std::size_t h = j;

    auto finish = [&](bool matched, std::size_t length) {
        m.set(j, length);
        if (counters) counters->record_verification(length);
        return matched;
    };

    for (;;) {
        const std::size_t k = m.get(h);
        if (k == 0) {
            if (read(text, h, counters) != p.at(i)) return finish(false, j - h);
            if (i == 1) return finish(true, n);
            --i;
            --h;
            continue;
        }
        const std::size_t ni = nprof(i);
        if (k < ni) {
            // T[h-k+1..h] = P[n-k+1..n] = P[i-k+1..i], nothing known beyond.
            i -= k;
            h -= k;
        } else if (ni == i) {
            return finish(true, n);
        } else if (k > ni) {
            // T[h-ni] = P[n-ni] != P[i-ni] by maximality of ni.
            return finish(false, j - h + ni);
        } else {
            i -= k;
            h -= k;
        }
    }
}

InspectionOrder::InspectionOrder(std::size_t n, std::uint64_t seed) : rng_(seed), perm_(n) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{1});
}

std::size_t InspectionOrder::draw(std::size_t k) {
    const std::size_t r = k + static_cast<std::size_t>(rng_.below(perm_.size() - k));
    std::swap(perm_[k], perm_[r]);
    return perm_[k];
}

bool verify_random(const Pattern& p, std::string_view text, std::size_t window_start, InspectionOrder& order,
                   Counters* counters) {
    const std::size_t n = p.size();
    assert(order.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t pos = order.draw(k);
        if (read(text, window_start + pos, counters) != p.at(pos)) {
            if (counters) counters->record_verification(k);
            return false;
        }
    }
    if (counters) counters->record_verification(n);
    return true;
}

MatchReport search(const Pattern& p, const NProfile& nprof, const SparseModel& s, const ShiftTables& tables,
                   std::string_view text, const SearchConfig& config) {
    MatchReport report;
    report.algorithm = config.algorithm;
    report.policy = tables.policy;
    report.seed = config.seed;
    report.reproduction_mode = tables.policy == ShiftPolicy::paper;
    Counters* counters = config.collect_counters ? &report.counters : nullptr;

    const std::size_t n = p.size();
    const std::size_t m = text.size();
    if (n > m) return report;

    const bool random_match = config.algorithm == Algorithm::b;
    MTable mtable = config.mtable == MTable::Mode::full ? MTable::full(m) : MTable::ring(n);
    std::optional<InspectionOrder> order;
    if (random_match) order.emplace(n, config.seed);

    std::size_t i = 0;
    for (;;) {
        const auto ev = classify_event(text, i, s, counters);
        if (counters) counters->record_event(ev.kind);
        std::size_t shift = 0;
        switch (ev.kind) {
            case EventKind::type1:
                shift = tables.type1(ev.c);
                break;
            case EventKind::type2:
                shift = tables.type2(ev.c, ev.d);
                break;
            case EventKind::type3: {
                const bool hit = random_match ? verify_random(p, text, i, *order, counters)
                                              : verify_ag(p, nprof, mtable, text, i, counters);
                if (hit) report.occurrences.push_back(i + 1);
                shift = tables.type3();
                break;
            }
        }
        assert(shift >= 1);
        if (i + shift + n > m) break;
        if (counters) counters->record_shift(shift);
        i += shift;
    }
    return report;
}

MatchReport naive_search(const Pattern& p, std::string_view text, bool collect_counters) {
    MatchReport report;
    report.algorithm = Algorithm::naive;
    Counters* counters = collect_counters ? &report.counters : nullptr;
    const std::size_t n = p.size();
    const std::size_t m = text.size();
    if (n > m) return report;
    for (std::size_t i = 0; i + n <= m; ++i) {
        std::size_t k = 1;
        while (k <= n && read(text, i + k, counters) == p.at(k)) ++k;
        if (k > n) report.occurrences.push_back(i + 1);
        if (counters && i + 1 + n <= m) counters->record_shift(1);
    }
    return report;
}

MatchReport horspool_search(const Pattern& p, std::string_view text, bool collect_counters) {
    MatchReport report;
    report.algorithm = Algorithm::horspool;
    Counters* counters = collect_counters ? &report.counters : nullptr;
    const std::size_t n = p.size();
    const std::size_t m = text.size();
    if (n > m) return report;

    std::array<std::size_t, kAlphabet> skip;
    skip.fill(n);
    for (std::size_t pos = 1; pos < n; ++pos) skip[p.at(pos)] = n - pos;

    std::size_t i = 0;
    for (;;) {
        const Byte last = read(text, i + n, counters);
        if (last == p.at(n)) {
            std::size_t k = n - 1;
            while (k >= 1 && read(text, i + k, counters) == p.at(k)) --k;
            if (k == 0) report.occurrences.push_back(i + 1);
        }
        const std::size_t shift = skip[last];
        if (i + shift + n > m) break;
        if (counters) counters->record_shift(shift);
        i += shift;
    }
    return report;
}

PreparedPattern prepare(std::string_view bytes) {
    Pattern p(bytes);
    NProfile nprof = compute_n_profile(p);
    SparseModel s = select_sparse(p);
    ShiftTables paper = build_shift_tables(p, s, ShiftPolicy::paper);
    ShiftTables safe = build_shift_tables(p, s, ShiftPolicy::safe);
    return PreparedPattern{std::move(p), std::move(nprof), s, paper, safe};
}

MatchReport find_all(const PreparedPattern& prepared, std::string_view text, const SearchConfig& config) {
    switch (config.algorithm) {
        case Algorithm::naive: return naive_search(prepared.pattern, text, config.collect_counters);
        case Algorithm::horspool: return horspool_search(prepared.pattern, text, config.collect_counters);
        case Algorithm::a:
        case Algorithm::b: break;
    }
    return search(prepared.pattern, prepared.nprof, prepared.sparse, prepared.tables(config.policy), text, config);
}

}  // namespace sparsematch
