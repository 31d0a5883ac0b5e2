#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gdeck/error.hpp"
#include "gdeck/naive.hpp"
#include "gdeck/search.hpp"

using namespace gdeck;

namespace {

bool has_witness(const CollisionReport& r, const std::string& x, const std::string& y) {
    return std::find(r.witnesses.begin(), r.witnesses.end(), std::make_pair(x, y)) != r.witnesses.end();
}

std::string temp_path(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("scan_length at fixed n") {
    const GapParams p(2, 2);
    const auto six = scan_length(6, p, DeckKind::full_b);
    CHECK(six.found());
    CHECK(six.confusable_pairs == 3);
    CHECK(std::find(six.witnesses.begin(), six.witnesses.end(), std::make_pair(std::string("001101"),
                                                                               std::string("010011"))) !=
          six.witnesses.end());
    CHECK_FALSE(scan_length(5, p, DeckKind::full_b).found());
    CHECK(scan_length(3, p, DeckKind::exact_d).found());

    const auto hit = find_collision(6, p, DeckKind::full_b);
    REQUIRE(hit);
    CHECK(hit->first < hit->second);
    CHECK(deck_equal(hit->first, hit->second, p));
}

TEST_CASE("first nondegenerate length") {
    CHECK(first_nondegenerate_length(GapParams(2, 2)) == 3);
    CHECK(first_nondegenerate_length(GapParams(1, 4)) == 4);
    CHECK(first_nondegenerate_length(GapParams(3, 3)) == 7);
    // Below it the k-slice is empty everywhere: 01 and 10 share their 2-gapped decks.
    CHECK(deck_equal(parse_binary("01"), parse_binary("10"), GapParams(2, 2)));
    CHECK(search_G(GapParams(2, 2), 6, {}, 2).n == 2u);
}

TEST_CASE("G(k) for the 2-gapped deck") {
    const auto g2 = search_G(GapParams(2, 2), 10);
    REQUIRE(g2.n);
    CHECK(*g2.n == 6);
    CHECK(g2.confusable_pairs == 3);
    CHECK(g2.witnesses.front() == std::make_pair(std::string("001101"), std::string("010011")));
    CHECK(g2.scanned_from == 3);
    CHECK(g2.scanned_to == 6);

    SearchOptions opt;
    opt.workers = 4;
    const auto g3 = search_G(GapParams(2, 3), 14, opt);
    REQUIRE(g3.n);
    CHECK(*g3.n == 13);
    CHECK(g3.witnesses.front() == std::make_pair(std::string("0001010000100"), std::string("0010000101000")));
    CHECK(has_witness(g3, "1101111010111", "1110101111011"));
}

TEST_CASE("S(k) for the classical deck") {
    CHECK(search_G(GapParams(1, 2), 8).n == 4u);
    CHECK(search_G(GapParams(1, 3), 10).n == 7u);
}

TEST_CASE("G*(k)") {
    const auto g1 = search_G_star(GapParams(2, 1), 8);
    REQUIRE(g1.n);
    CHECK(*g1.n == 4);
    CHECK(g1.witnesses.front() == std::make_pair(std::string("0010"), std::string("0100")));
    const auto g2 = search_G_star(GapParams(2, 2), 12);
    REQUIRE(g2.n);
    CHECK(*g2.n == 8);
    CHECK(g2.witnesses.front() == std::make_pair(std::string("00011010"), std::string("00100110")));
}

TEST_CASE("exact-deck minima") {
    CHECK(search_exact_D(GapParams(2, 2), 8).n == 3u);
    CHECK(search_exact_D(GapParams(2, 3), 8).n == 5u);
    CHECK(search_exact_D(GapParams(2, 4), 10).n == 7u);
    const auto s3 = search_exact_D(GapParams(3, 2), 8);
    REQUIRE(s3.n);
    CHECK(*s3.n == 4);
    CHECK(s3.witnesses.front() == std::make_pair(std::string("0000"), std::string("0010")));
}

TEST_CASE("S_U searches") {
    const auto u11 = search_SU(USetSpec::single(1, 1), 6);
    REQUIRE(u11.n);
    CHECK(*u11.n == 2);
    CHECK(u11.witnesses.front() == std::make_pair(std::string("XY"), std::string("YX")));
    CHECK(u11.family == "U_1(1)");

    const auto u12 = search_SU(USetSpec::single(1, 2), 8);
    REQUIRE(u12.n);
    CHECK(*u12.n == 4);
    CHECK(u12.witnesses.front() == std::make_pair(std::string("XYYX"), std::string("YXXY")));

    const auto u32 = search_SU(USetSpec::pair(3, 2), 10);
    REQUIRE(u32.n);
    CHECK(*u32.n == 7);
    CHECK(u32.witnesses.front() == std::make_pair(std::string("XYYXXXY"), std::string("YXXXYYX")));
    CHECK(u32.confusable_pairs == 2);
}

TEST_CASE("search agrees with pairwise enumeration") {
    struct Case {
        DeckKind kind;
        naive::Relation rel;
    };
    const Case cases[] = {{DeckKind::full_b, naive::Relation::full},
                          {DeckKind::exact_d, naive::Relation::exact_slice},
                          {DeckKind::eq7_star, naive::Relation::eq7}};
    for (int s = 1; s <= 3; ++s) {
        for (int k = 1; k <= 3; ++k) {
            const GapParams p(s, k);
            for (const auto& c : cases) {
                for (std::size_t n = 2; n <= 10; ++n) {
                    CAPTURE(s);
                    CAPTURE(k);
                    CAPTURE(n);
                    const auto fast = find_collision(n, p, c.kind);
                    const auto slow = naive::find_collision(n, p, c.rel);
                    REQUIRE(fast.has_value() == slow.has_value());
                    if (fast) CHECK(*fast == *slow);
                }
            }
        }
    }
    // Longer lengths on the cases closest to the thresholds.
    for (std::size_t n = 11; n <= 14; ++n) {
        CAPTURE(n);
        CHECK(find_collision(n, GapParams(2, 3), DeckKind::full_b) ==
              naive::find_collision(n, GapParams(2, 3), naive::Relation::full));
    }
}

TEST_CASE("results do not depend on worker count") {
    SearchOptions one;
    one.workers = 1;
    SearchOptions eight;
    eight.workers = 8;
    for (auto kind : {DeckKind::full_b, DeckKind::exact_d, DeckKind::eq7_star}) {
        const auto a = scan_length(13, GapParams(2, 3), kind, one);
        const auto b = scan_length(13, GapParams(2, 3), kind, eight);
        CHECK(a.witnesses == b.witnesses);
        CHECK(a.confusable_pairs == b.confusable_pairs);
        CHECK(a.classes == b.classes);
    }
}

TEST_CASE("checkpoint resume") {
    const auto path = temp_path("gdeck_test_checkpoint.log");
    SearchOptions opt;
    opt.checkpoint_path = path;
    std::vector<std::string> log;
    opt.log = [&log](const std::string& m) { log.push_back(m); };

    const auto first = search_G(GapParams(2, 2), 5, opt);
    CHECK_FALSE(first.n);
    {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text.find("FULL_B s=2 k=2 n=5 clear") != std::string::npos);
        CHECK(text.find("range=") != std::string::npos);
    }

    log.clear();
    const auto second = search_G(GapParams(2, 2), 8, opt);
    REQUIRE(second.n);
    CHECK(*second.n == 6);
    CHECK(std::count_if(log.begin(), log.end(), [](const std::string& m) {
              return m.find("(from checkpoint)") != std::string::npos;
          }) == 3);

    // A forged clear record is trusted, so resumed searches skip that length.
    std::filesystem::remove(path);
    std::ofstream(path) << "FULL_B s=2 k=2 n=6 clear\nFULL_B s=2 k=3 n=7 clear\n";
    const auto forged = search_G(GapParams(2, 2), 7, opt);
    REQUIRE(forged.n);
    CHECK(*forged.n == 7);
    std::filesystem::remove(path);
}

TEST_CASE("search argument errors") {
    CHECK_THROWS_AS((void)search_G(GapParams(2, 2), 3, {}, 5), std::invalid_argument);
    CHECK_THROWS((void)scan_length(kMaxSearchLength + 1, GapParams(2, 2), DeckKind::full_b));
    CHECK_THROWS((void)scan_length(1, GapParams(2, 2), DeckKind::eq7_star));
}

TEST_CASE("deck kind names") {
    CHECK(to_string(DeckKind::full_b) == "FULL_B");
    CHECK(to_string(DeckKind::exact_d) == "EXACT_D");
    CHECK(to_string(DeckKind::eq7_star) == "EQ7_STAR");
    CHECK(to_string(DeckKind::wildcard_u) == "WILDCARD_U");
}
