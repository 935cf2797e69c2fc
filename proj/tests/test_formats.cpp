#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "circstab/schur.hpp"
#include "circstab/twofold.hpp"

using namespace circstab;

namespace {
std::string golden_path(const std::string& name) {
    if (const char* dir = std::getenv("CIRCSTAB_GOLDEN_DIR")) return std::string(dir) + "/" + name;
    return "tests/golden/v1/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string all, line;
    while (std::getline(in, line)) all += line + "\n";
    return all;
}
}  // namespace

TEST_CASE("connection set text format") {
    ConnectionSet s(10, std::vector<int>{1, 2, 8, 9});
    CHECK(s.to_string() == "10:1,2,8,9");
    CHECK(ConnectionSet::parse("10:1,2,8,9") == s);
    CHECK(ConnectionSet::parse("6:") == ConnectionSet(6, std::vector<int>{}));
    CHECK_THROWS_AS(ConnectionSet::parse("nonsense"), ValidationError);
    CHECK_THROWS_AS(ConnectionSet::parse("10:1"), ValidationError);  // asymmetric
    CHECK_THROWS_AS(ConnectionSet::parse_members(6, "0,3"), ValidationError);
}

TEST_CASE("text format round-trips on random sets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 30);
        std::uint64_t mask = 0;
        for (int i = 1; i <= n / 2; ++i)
            if (rng() % 2) {
                mask |= std::uint64_t{1} << i;
                mask |= std::uint64_t{1} << ((n - i) % n);
            }
        ConnectionSet s(n, mask);
        CHECK(ConnectionSet::parse(s.to_string()) == s);
    }
}

TEST_CASE("verdict json is deterministic and matches golden") {
    auto s = ConnectionSet::parse("10:1,2,8,9");
    auto v = classify(s, ClassifyMode::CrossCheck);
    auto json = verdict_to_json(s, v);
    CHECK(json == verdict_to_json(s, classify(s, ClassifyMode::CrossCheck)));
    CHECK(json + "\n" == slurp(golden_path("classify_10_1289.json")));
}

TEST_CASE("ring dumps match golden") {
    auto ring = cover_transitivity_module(ConnectionSet::parse("10:1,2,8,9"));
    CHECK(ring_to_json(ring) + "\n" == slurp(golden_path("ring_cover_10_1289.json")));
    auto c5 = transitivity_module(ConnectionSet::parse("5:1,4"));
    CHECK(ring_to_json(c5) + "\n" == slurp(golden_path("ring_c5.json")));
}
