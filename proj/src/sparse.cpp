#include "sparsematch/sparse.hpp"

#include <cassert>

namespace sparsematch {

bool prefer(const SparseCandidate& a, const SparseCandidate& b) noexcept {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.endpos > b.endpos;
}

std::optional<SparseCandidate> sparse_for_pair(const Pattern& p, Byte u, Byte v) {
    const auto us = p.occurrences(u);
    const auto vs = p.occurrences(v);
    if (us.empty() || vs.empty()) return std::nullopt;

    std::optional<SparseCandidate> best;
    auto offer = [&](std::size_t s, std::size_t e) {
        SparseCandidate c{u, v, s, e};
        if (!best || prefer(c, *best)) best = c;
    };

    if (u == v) {
        if (us.size() == 1) {
            offer(us[0], us[0]);
        } else {
            for (std::size_t k = 1; k < us.size(); ++k) offer(us[k - 1], us[k]);
        }
        return best;
    }

    // Merge the two ascending lists; an admissible span is a u immediately
    // followed (in the merged order) by a v.
    std::size_t a = 0, b = 0;
    std::optional<std::size_t> last_u;
    while (a < us.size() || b < vs.size()) {
        if (b == vs.size() || (a < us.size() && us[a] < vs[b])) {
            last_u = us[a++];
        } else {
            if (last_u) offer(*last_u, vs[b]);
            last_u.reset();
            ++b;
        }
    }
    return best;
}

SparseModel select_sparse(const Pattern& p) {
    std::optional<SparseCandidate> best;
    for (Byte u : p.alphabet()) {
        for (Byte v : p.alphabet()) {
            auto c = sparse_for_pair(p, u, v);
            if (c && (!best || prefer(*c, *best))) best = c;
        }
    }
    assert(best);

    SparseModel s;
    s.startpos = best->startpos;
    s.endpos = best->endpos;
    s.startc = p.at(s.startpos);
    s.endc = p.at(s.endpos);
    s.length = best->length();
    for (std::size_t pos = s.startpos; pos <= s.endpos; ++pos) {
        s.member[p.at(pos)] = true;
        s.rightmost_in_sparse[p.at(pos)] = pos;
    }
    return s;
}

std::string_view to_string(ShiftPolicy policy) noexcept {
    return policy == ShiftPolicy::paper ? "paper" : "safe";
}

std::optional<ShiftPolicy> parse_policy(std::string_view name) noexcept {
    if (name == "paper") return ShiftPolicy::paper;
    if (name == "safe") return ShiftPolicy::safe;
    return std::nullopt;
}

namespace {

ShiftTables paper_tables(const Pattern& p, const SparseModel& s) {
    ShiftTables t;
    t.policy = ShiftPolicy::paper;
    for (std::size_t c = 0; c < kAlphabet; ++c) {
        const auto b = static_cast<Byte>(c);
        if (s.member[b]) {
            t.t1[b] = s.endpos - s.rightmost_in_sparse[b];  // 0 for endc, never consulted
        } else if (p.contains(b)) {
            t.t1[b] = s.length + 1;
        } else {
            t.t1[b] = p.size();
        }
    }
    t.t2_equal = s.length;
    t.t2_differ = s.length + 1;
    t.t3 = s.startc == s.endc ? s.length : s.length + 1;
    return t;
}

// A placement shifted by `s` is consistent with "text byte c sits under
// pattern position `pos`" iff pos - s falls off the pattern or P[pos - s] = c.
bool consistent(const Pattern& p, std::size_t pos, std::size_t s, Byte c) {
    return s >= pos || p.at(pos - s) == c;
}

ShiftTables safe_tables(const Pattern& p, const SparseModel& s) {
    ShiftTables t;
    t.policy = ShiftPolicy::safe;
    const std::size_t e = s.endpos;
    const std::size_t b = s.startpos;

    t.t1.fill(e);
    for (std::size_t shift = e - 1; shift >= 1; --shift) t.t1[p.at(e - shift)] = shift;

    // Shifts that keep endc under endpos, ascending.
    std::vector<std::size_t> end_ok;
    for (std::size_t shift = 1; shift <= e; ++shift) {
        if (consistent(p, e, shift, s.endc)) end_ok.push_back(shift);
    }

    t.t3 = e;
    for (std::size_t shift : end_ok) {
        if (consistent(p, b, shift, s.startc)) {
            t.t3 = shift;
            break;
        }
    }

    // For each d the first end-consistent shift with P[b - shift] = d, else the
    // first one with shift >= b; end_ok always ends with e >= b.
    std::size_t beyond = e;
    for (std::size_t shift : end_ok) {
        if (shift >= b) {
            beyond = shift;
            break;
        }
    }
    t.t2.fill(beyond);
    for (auto it = end_ok.rbegin(); it != end_ok.rend(); ++it) {
        if (*it < b) t.t2[p.at(b - *it)] = *it;
    }
    return t;
}

}  // namespace

ShiftTables build_shift_tables(const Pattern& p, const SparseModel& s, ShiftPolicy policy) {
    return policy == ShiftPolicy::paper ? paper_tables(p, s) : safe_tables(p, s);
}

}  // namespace sparsematch
