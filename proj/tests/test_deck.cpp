#include <doctest.h>

#include <stdexcept>

#include "gdeck/deck.hpp"
#include "gdeck/error.hpp"
#include "gdeck/naive.hpp"

using namespace gdeck;

namespace {
BinaryString B(const char* s) { return parse_binary(s); }
}  // namespace

TEST_CASE("pattern indexing") {
    CHECK(pattern_count(1) == 2);
    CHECK(pattern_count(3) == 14);
    CHECK(pattern_index(1, 0) == 0);
    CHECK(pattern_index(2, 0) == 2);
    CHECK(pattern_index(2, 3) == 5);
    for (std::size_t i = 0; i < pattern_count(5); ++i) {
        const auto [len, value] = pattern_at(i);
        CHECK(pattern_index(len, value) == i);
        CHECK(pattern_string(i).size() == static_cast<std::size_t>(len));
    }
    CHECK(pattern_string(4).str() == "10");
}

TEST_CASE("gap params") {
    CHECK_THROWS_AS(GapParams(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(GapParams(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(GapParams(2, kMaxDepth + 1), std::invalid_argument);
    CHECK(GapParams(3, 4).s() == 3);
}

TEST_CASE("count_gapped") {
    CHECK(count_gapped(B("11"), B("01110"), 2) == 1);
    CHECK(count_gapped(B("1"), B("010011"), 2) == 3);
    // Qualifying index pairs of 1001 at gap 2: (1,3)=10, (1,4)=11, (2,4)=01.
    CHECK(count_gapped(B("10"), B("1001"), 2) == 1);
    CHECK(count_gapped(B("11"), B("1001"), 2) == 1);
    CHECK(count_gapped(B("01"), B("1001"), 2) == 1);
    CHECK(count_gapped(B("00"), B("1001"), 2) == 0);
    CHECK(count_gapped(B("10"), B("1001"), 1) == 2);
    CHECK(count_gapped(B("0000"), B("0000000"), 2) == 1);
    CHECK_THROWS((void)count_gapped(BinaryString{}, B("01"), 2));
}

TEST_CASE("signature slices") {
    const GapParams p(2, 2);
    const auto sig = signature(B("01110"), p);
    const auto two = sig.slice(2);
    REQUIRE(two.size() == 4);
    CHECK(two[0] == 1);
    CHECK(two[1] == 2);
    CHECK(two[2] == 2);
    CHECK(two[3] == 1);

    const auto one = signature(B("1"), p);
    CHECK(one.count(B("1")) == 1);
    CHECK(one.count(B("0")) == 0);
    for (auto v : one.slice(2)) CHECK(v == 0);
    CHECK(one.source_length() == 1);
}

TEST_CASE("punctured signatures") {
    const GapParams p(2, 1);
    CHECK(punctured_signature(B("0010"), p, Puncture::both) == signature(B("01"), p));
    CHECK(punctured_signature(B("0010"), p, Puncture::left) == signature(B("010"), p));
    CHECK(punctured_signature(B("0100"), p, Puncture::right) == signature(B("010"), p));
}

TEST_CASE("deck equality") {
    CHECK(deck_equal(B("010011"), B("001101"), GapParams(2, 2)));
    CHECK_FALSE(deck_equal(B("01110"), B("10001"), GapParams(2, 2)));
    CHECK(deck_equal(B("1001"), B("0110"), GapParams(1, 2)));
    CHECK_FALSE(deck_equal(B("1001"), B("0110"), GapParams(2, 2)));
    CHECK(deck_equal(B("1101111010111"), B("1110101111011"), GapParams(2, 3)));
    CHECK(deck_equal(B("0110"), B("0110"), GapParams(3, 5)));
}

TEST_CASE("exact deck equality") {
    CHECK(exact_deck_equal(B("01110"), B("10001"), GapParams(2, 2)));
    CHECK_FALSE(exact_deck_equal(B("01110"), B("10001"), GapParams(2, 1)));
    CHECK(exact_deck_equal(B("110"), B("100"), GapParams(2, 2)));
}

TEST_CASE("verify_eq7") {
    const auto r = verify_eq7(B("0010"), B("0100"), GapParams(2, 1));
    CHECK(r.plain_equal);
    CHECK(r.lr_equal);
    CHECK(r.l_equal);
    CHECK(r.r_equal);
    CHECK(r.all());

    const auto t = verify_eq7(B("010011"), B("001101"), GapParams(2, 2));
    CHECK(t.plain_equal);
    const GapParams p(2, 2);
    CHECK(t.lr_equal == (naive::signature(B("1001"), p) == naive::signature(B("0110"), p)));
    CHECK(t.l_equal == (naive::signature(B("10011"), p) == naive::signature(B("01101"), p)));
    CHECK(t.r_equal == (naive::signature(B("01001"), p) == naive::signature(B("00110"), p)));

    CHECK(verify_eq7(B("101"), B("101"), GapParams(2, 3)).all());
    CHECK_THROWS((void)verify_eq7(B("1"), B("0"), GapParams(2, 1)));
    CHECK_THROWS((void)verify_eq7(B("10"), B("100"), GapParams(2, 1)));
}

TEST_CASE("enumerate_deck") {
    const auto d = enumerate_deck(B("1001"), GapParams(2, 2));
    REQUIRE(d.size() == 5);
    CHECK(d[0].pattern.str() == "0");
    CHECK(d[0].multiplicity == 2);
    CHECK(d[1].pattern.str() == "1");
    CHECK(d[1].multiplicity == 2);
    CHECK(d[2].pattern.str() == "01");
    CHECK(d[2].multiplicity == 1);
    CHECK(d[3].pattern.str() == "10");
    CHECK(d[3].multiplicity == 1);
    CHECK(d[4].pattern.str() == "11");
    CHECK(d[4].multiplicity == 1);

    CHECK(enumerate_deck(BinaryString{}, GapParams(2, 2)).empty());
    const auto z = enumerate_deck(B("0"), GapParams(2, 1));
    REQUIRE(z.size() == 1);
    CHECK(z[0].multiplicity == 1);
    CHECK_THROWS_AS((void)enumerate_deck(B("0"), GapParams(2, 20)), std::length_error);
}

TEST_CASE("fingerprint mode") {
    const auto x = B("0110100110010110");
    const GapParams p(2, 4);
    const auto exact = signature(x, p);
    const auto fp = signature(x, p, CountMode::fingerprint({7, 11}));
    CHECK(fp == fingerprint(exact, std::vector<std::uint64_t>{7, 11}));
    for (std::size_t i = 0; i < exact.patterns(); ++i) {
        CHECK(fp.count(i, 0) == exact.count(i) % 7);
        CHECK(fp.count(i, 1) == exact.count(i) % 11);
    }
    CHECK(fingerprint(exact, default_primes()) == signature(x, p, CountMode::fingerprint_default()));
    CHECK(CountMode::fingerprint_default().lanes() == 3);
    CHECK(default_primes()[0] == (std::uint64_t{1} << 62) - 57);
    CHECK_THROWS((void)CountMode::fingerprint({1}));
    CHECK_THROWS((void)CountMode::fingerprint({}));
}

TEST_CASE("exact mode overflow guard") {
    const GapParams p(1, 24);
    CHECK(exact_mode_safe(60, p));
    CHECK_FALSE(exact_mode_safe(200, p));
    const GapParams q(1, 12);
    const auto x = repeat(0, 300);
    CHECK_FALSE(exact_mode_safe(300, q));
    CHECK_THROWS_AS((void)signature(x, q), OverflowError);
    CHECK_NOTHROW((void)signature(x, q, CountMode::fingerprint_default()));
    CHECK_THROWS_AS((void)count_gapped(repeat(0, 34), repeat(0, 70), 1), OverflowError);
}
