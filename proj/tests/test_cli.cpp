#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = gdeck::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("equal") {
    auto r = run({"equal", "010011", "001101", "--s", "2", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "true\n");
    r = run({"equal", "1001", "0110", "-s", "2", "-k", "2"});
    CHECK(r.status == 1);
    CHECK(r.out == "false\n");
    r = run({"equal", "01110", "10001", "-s", "2", "-k", "2", "--exact-only"});
    CHECK(r.status == 0);
    r = run({"equal", "0110", "-k", "2"});
    CHECK(r.status == 2);
}

TEST_CASE("deck listing") {
    const auto r = run({"deck", "1001", "-s", "2", "-k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "# signature s=2 k=2 n=4 mode=EXACT\n0\t2\n1\t2\n01\t1\n10\t1\n11\t1\n");
    const auto p = run({"deck", "0010", "-k", "1", "--puncture", "LR"});
    CHECK(p.out == "# signature s=2 k=1 n=2 mode=EXACT\n0\t1\n1\t1\n");
    const auto fp = run({"deck", "1001", "-k", "1", "--mode", "fingerprint", "--primes", "7,11"});
    CHECK(fp.out == "# signature s=2 k=1 n=4 mode=FINGERPRINT\n0\t2\t2\n1\t2\t2\n");
    CHECK(run({"deck", "102"}).status == 2);
    CHECK(run({"deck", "10", "--mode", "magic"}).status == 2);
    CHECK(run({"deck", "10", "--primes", "7"}).status == 2);
}

TEST_CASE("construct") {
    auto r = run({"construct", "padded", "--k", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("0010\n0100\n", 0) == 0);
    r = run({"construct", "exact-family", "--z", "10", "--fills", "1", "0"});
    CHECK(r.out.rfind("110\n100\n", 0) == 0);
    r = run({"--json", "construct", "s-padded", "-s", "3", "-k", "3", "--trimmed"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["length"] == 41);
    CHECK(j["schema"] == "gdeck/1");
}

TEST_CASE("eq7") {
    CHECK(run({"eq7", "0010", "0100", "-k", "1"}).status == 0);
    const auto r = run({"eq7", "010011", "001101", "-k", "2"});
    CHECK(r.status == 1);
    CHECK(r.out.rfind("plain_equal=true\n", 0) == 0);
}

TEST_CASE("search") {
    auto r = run({"search", "G", "-s", "2", "-k", "2", "--n-max", "8"});
    CHECK(r.status == 0);
    CHECK(r.out.find("n=6\n") != std::string::npos);
    CHECK(r.out.find("witness 001101 010011\n") != std::string::npos);
    CHECK(r.err.find("clear") != std::string::npos);

    r = run({"search", "G", "-s", "2", "-k", "2", "--n-max", "5", "--quiet"});
    CHECK(r.status == 1);
    CHECK(r.out.find("n=none\n") != std::string::npos);
    CHECK(r.err.empty());

    r = run({"search", "SU", "--k1", "3", "--k2", "2", "--n-max", "8", "--quiet", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 7);
    CHECK(j["witnesses"][0][0] == "XYYXXXY");

    const auto a = run({"search", "G", "-k", "3", "--n-max", "13", "--workers", "1", "--quiet", "--json"});
    const auto b = run({"search", "G", "-k", "3", "--n-max", "13", "--workers", "8", "--quiet", "--json"});
    CHECK(a.out == b.out);
    CHECK(run({"search", "G", "--workers", "0"}).status == 2);
}

TEST_CASE("wildcard") {
    CHECK(run({"wildcard", "count", "JX", "YXYX"}).out == "4\n");
    CHECK(run({"wildcard", "uequiv", "XY", "YX", "--r", "1", "--k", "1"}).status == 0);
    CHECK(run({"wildcard", "uequiv", "XY", "YX", "--r", "1", "--k", "2"}).status == 1);
    CHECK(run({"wildcard", "substitute", "XY", "0101", "1100"}).out == "001010011000\n");
    CHECK(run({"wildcard", "family", "--r", "1", "--k", "2"}).out == "X\nY\nXJ\nYJ\nJX\nJY\n");
    const auto r = run({"wildcard", "lemma3", "--x", "0010", "--y", "0100", "--p", "XYYXXXY", "--q", "YXXXYYX",
                        "--k", "1", "--sigma", "1"});
    CHECK(r.status == 1);
    CHECK(r.out.find("hypothesis.pq_equivalent=true") != std::string::npos);
}

TEST_CASE("bounds") {
    const auto t2 = run({"bounds", "table2"});
    CHECK(t2.status == 0);
    for (const char* v : {"42742211", "60773950", "86039831", "121319982", "170424514", "238563374"}) {
        CHECK(t2.out.find(v) != std::string::npos);
    }
    CHECK(run({"bounds", "single", "--formula", "padded", "-k", "4"}).out == "PADDED 58\n");
    const auto j = nlohmann::json::parse(run({"--json", "bounds", "single", "-k", "10"}).out);
    CHECK(j["value"] == 4092);
    CHECK(run({"bounds", "single", "--formula", "nope", "-k", "3"}).status == 2);
    CHECK(run({"bounds", "table1"}).out.find("110011010101001100110100") != std::string::npos);
}

TEST_CASE("oracle") {
    CHECK(run({"oracle", "deck", "1001", "-k", "2"}).out ==
          "# signature s=2 k=2 n=4 mode=EXACT\n0\t2\n1\t2\n01\t1\n10\t1\n11\t1\n");
    CHECK(run({"oracle", "collision", "-k", "2", "--n", "6"}).out == "witness 001101 010011\n");
    CHECK(run({"oracle", "collision", "-k", "2", "--n", "5"}).status == 1);
}

TEST_CASE("inputs from files") {
    const auto path = (std::filesystem::temp_directory_path() / "gdeck_cli_pair.txt").string();
    std::ofstream(path) << "# k = 2 pair\n010011\n001101\n";
    CHECK(run({"equal", "@" + path, "-k", "2"}).status == 0);
    std::filesystem::remove(path);
    CHECK(run({"equal", "@/nonexistent/file", "-k", "2"}).status == 2);
}

TEST_CASE("usage") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"deck", "01", "--bogus"}).status == 2);
    const auto h = run({"--help"});
    CHECK(h.status == 0);
    CHECK(h.out.find("search") != std::string::npos);
    CHECK(run({"search", "G", "--help"}).status == 0);
}
