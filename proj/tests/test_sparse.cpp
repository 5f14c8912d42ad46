#include <doctest.h>

#include "oracles.hpp"
#include "sparsematch/harness.hpp"
#include "sparsematch/sparse.hpp"

using namespace sparsematch;

namespace {

Byte b(char c) { return to_byte(c); }

}  // namespace

TEST_CASE("sparse_for_pair examples") {
    const auto abra = build_pattern("abracadabra");
    auto bb = sparse_for_pair(abra, b('b'), b('b'));
    REQUIRE(bb);
    CHECK(bb->startpos == 2);
    CHECK(bb->endpos == 9);
    CHECK(bb->length() == 8);
    CHECK(oracle::sparse_for_pair("abracadabra", 'b', 'b') == oracle::Span{2, 9});

    const auto cabab = build_pattern("cabab");
    CHECK_FALSE(sparse_for_pair(cabab, b('b'), b('c')));

    auto cb = sparse_for_pair(cabab, b('c'), b('b'));
    REQUIRE(cb);
    CHECK(cb->startpos == 1);
    CHECK(cb->endpos == 3);
    CHECK(oracle::sparse_for_pair("cabab", 'c', 'b') == oracle::Span{1, 3});

    auto aa = sparse_for_pair(build_pattern("aa"), b('a'), b('a'));
    REQUIRE(aa);
    CHECK(aa->startpos == 1);
    CHECK(aa->endpos == 2);

    auto single = sparse_for_pair(cabab, b('c'), b('c'));
    REQUIRE(single);
    CHECK(single->length() == 1);
}

TEST_CASE("select_sparse examples") {
    const auto cabab = build_pattern("cabab");
    const auto s = select_sparse(cabab);
    CHECK(s.startpos == 3);
    CHECK(s.endpos == 5);
    CHECK(s.startc == b('b'));
    CHECK(s.endc == b('b'));
    CHECK(s.length == 3);
    CHECK(s.substring(cabab) == "bab");
    CHECK(oracle::select_sparse("cabab") == oracle::Span{3, 5});

    const auto abra = build_pattern("abracadabra");
    const auto sa = select_sparse(abra);
    CHECK(sa.substring(abra) == "racadabr");
    CHECK(sa.startpos == 3);
    CHECK(sa.endpos == 10);
    CHECK(sa.length == 8);
    CHECK(oracle::select_sparse("abracadabra") == oracle::Span{3, 10});

    const auto one = select_sparse(build_pattern("a"));
    CHECK(one.startpos == 1);
    CHECK(one.endpos == 1);
    CHECK(one.length == 1);
}

TEST_CASE("select_sparse matches exhaustive enumeration on small patterns") {
    for (std::size_t alphabet = 1; alphabet <= 4; ++alphabet) {
        for (std::uint64_t t = 0; t < 1500; ++t) {
            Rng rng(derive_seed(alphabet * 7919, t));
            const auto bytes = harness::gen_pattern(alphabet, rng.between(1, 12), rng.next());
            const auto p = build_pattern(bytes);
            const auto s = select_sparse(p);
            const auto expected = oracle::select_sparse(bytes);
            REQUIRE_MESSAGE(s.startpos == expected.start, bytes);
            REQUIRE_MESSAGE(s.endpos == expected.end, bytes);
            for (Byte u : p.alphabet()) {
                for (Byte v : p.alphabet()) {
                    auto got = sparse_for_pair(p, u, v);
                    auto want = oracle::sparse_for_pair(bytes, static_cast<char>(u), static_cast<char>(v));
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) {
                        CHECK(got->startpos == want->start);
                        CHECK(got->endpos == want->end);
                    }
                }
            }
        }
    }
}

TEST_CASE("sparse length is at least the distinct count") {
    for (std::size_t alphabet : {1, 2, 4, 26}) {
        for (std::uint64_t t = 0; t < 500; ++t) {
            Rng rng(derive_seed(alphabet, t));
            const auto p = build_pattern(harness::gen_pattern(alphabet, rng.between(1, 200), rng.next()));
            const auto s = select_sparse(p);
            CHECK(s.length >= p.distinct());
            // startc/endc appear only at the ends of the span.
            for (std::size_t pos = s.startpos + 1; pos < s.endpos; ++pos) {
                CHECK(p.at(pos) != s.startc);
                CHECK(p.at(pos) != s.endc);
            }
        }
    }
}

TEST_CASE("paper shift tables") {
    const auto cabab = build_pattern("cabab");
    const auto t = build_shift_tables(cabab, select_sparse(cabab), ShiftPolicy::paper);
    CHECK(t.t1[b('a')] == 1);
    CHECK(t.t1[b('c')] == 4);
    CHECK(t.t1[b('z')] == 5);
    CHECK(t.t1[b('b')] == 0);
    CHECK(t.t3 == 3);
    CHECK(t.type2(b('b'), b('c')) == 4);
    CHECK(t.type2(b('b'), b('b')) == 3);

    const auto abra = build_pattern("abracadabra");
    const auto ta = build_shift_tables(abra, select_sparse(abra), ShiftPolicy::paper);
    CHECK(ta.t1[b('b')] == 1);
    CHECK(ta.t1[b('a')] == 2);
    CHECK(ta.t1[b('d')] == 3);
    CHECK(ta.t1[b('c')] == 5);
    CHECK(ta.t1[b('z')] == 11);
    CHECK(ta.t3 == 8);  // startc = endc = 'r'
}

TEST_CASE("safe shift tables") {
    const std::string_view bytes = "cabab";
    const auto p = build_pattern(bytes);
    const auto t = build_shift_tables(p, select_sparse(p), ShiftPolicy::safe);
    CHECK(t.t1[b('a')] == 1);
    CHECK(t.t1[b('b')] == 2);
    CHECK(t.t1[b('c')] == 4);
    CHECK(t.t1[b('z')] == 5);
    CHECK(t.t2[b('c')] == 2);
    CHECK(t.t3 == 5);

    // Oracle: endpos = 5, startpos = 3.
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'a'}}) == 1);
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'b'}}) == 2);
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'c'}}) == 4);
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'z'}}) == 5);
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'b'}, {3, 'c'}}) == 2);
    CHECK(oracle::smallest_safe_shift(bytes, {{5, 'b'}, {3, 'b'}}) == 5);
}

TEST_CASE("safe shifts are the smallest sound shifts") {
    for (std::size_t alphabet : {1, 2, 3, 4, 26}) {
        for (std::uint64_t t = 0; t < 800; ++t) {
            Rng rng(derive_seed(alphabet + 100, t));
            const auto bytes = harness::gen_pattern(alphabet, rng.between(1, 24), rng.next());
            const auto p = build_pattern(bytes);
            const auto s = select_sparse(p);
            const auto tables = build_shift_tables(p, s, ShiftPolicy::safe);
            const char endc = static_cast<char>(s.endc);
            const char startc = static_cast<char>(s.startc);

            for (std::size_t k = 0; k <= alphabet; ++k) {
                // k == alphabet probes a byte that cannot be in the pattern.
                const Byte c = k < alphabet ? harness::symbol(k) : Byte{0x21};
                const char ch = static_cast<char>(c);
                const auto t1 = tables.t1[c];
                CHECK(t1 >= 1);
                CHECK(t1 <= s.endpos);
                if (c != s.endc) CHECK(t1 == oracle::smallest_safe_shift(bytes, {{s.endpos, ch}}));
                if (s.startpos != s.endpos && c != s.startc) {
                    CHECK(tables.t2[c] == oracle::smallest_safe_shift(bytes, {{s.endpos, endc}, {s.startpos, ch}}));
                }
            }
            CHECK(tables.t3 == oracle::smallest_safe_shift(bytes, {{s.endpos, endc}, {s.startpos, startc}}));

            const auto paper = build_shift_tables(p, s, ShiftPolicy::paper);
            for (std::size_t c = 0; c < kAlphabet; ++c) {
                if (c != s.endc) CHECK(paper.t1[c] >= 1);
            }
        }
    }
}

TEST_CASE("policy names") {
    CHECK(parse_policy("safe") == ShiftPolicy::safe);
    CHECK(parse_policy("paper") == ShiftPolicy::paper);
    CHECK_FALSE(parse_policy("fast"));
    CHECK(to_string(ShiftPolicy::paper) == "paper");
}
