#include <doctest.h>

#include <random>

#include "circstab/schur.hpp"
#include "circstab/twofold.hpp"
#include "oracles.hpp"

using namespace circstab;

TEST_CASE("cover ambient is Z_n x Z_2, not Z_2n") {
    auto amb = AbelianAmbient::cover(10);
    CHECK(amb.size() == 20);
    CHECK(amb.add(3, 9) == 2);         // layer 0 + layer 0
    CHECK(amb.add(3, 19) == 12);       // 3 + (9, a) = (12, a)
    CHECK(amb.add(13, 19) == 2);       // (3, a) + (9, a) = (12, 0)... mod 10 = 2
    CHECK(amb.neg(13) == 17);          // -(3, a) = (7, a)
    CHECK(amb.neg(0) == 0);
}

TEST_CASE("transitivity module basic sets") {
    // C5: dihedral stabilizer orbits {0}, {1,4}, {2,3}
    auto ring5 = transitivity_module(ConnectionSet(5, std::vector<int>{1, 4}));
    CHECK(ring5.basic_sets.blocks ==
          std::vector<std::vector<int>>{{0}, {1, 4}, {2, 3}});

    // K4: 2-transitive
    auto ring4 = transitivity_module(ConnectionSet(4, std::vector<int>{1, 2, 3}));
    CHECK(ring4.basic_sets.blocks == std::vector<std::vector<int>>{{0}, {1, 2, 3}});

    // hard instance cover: the basic set containing a is {a, 5+a}
    auto cover_ring = cover_transitivity_module(ConnectionSet(10, std::vector<int>{1, 2, 8, 9}));
    CHECK(cover_ring.basic_set_of(10) == std::vector<int>{10, 15});
}

TEST_CASE("ring axioms hold for computed transitivity modules") {
    // exhaustive to 14 vertices, sampled beyond (up to the 24-vertex range)
    for (int n = 3; n <= 14; ++n)
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            auto ring = transitivity_module(s);
            CHECK_FALSE(verify_ring_axioms(ring).has_value());
            CHECK(inverse_closed(ring));
            CHECK(ring.basic_sets.blocks.front() == std::vector<int>{0});
        }
    std::mt19937_64 rng(77);
    for (int n : {16, 20, 24}) {
        auto all = oracles::all_symmetric_sets(n);
        for (int trial = 0; trial < 40; ++trial) {
            ConnectionSet s(n, all[rng() % all.size()]);
            auto ring = transitivity_module(s);
            CHECK_FALSE(verify_ring_axioms(ring).has_value());
            CHECK(inverse_closed(ring));
        }
    }
}

TEST_CASE("cover rings pass the axioms and the inverse axiom") {
    for (int n : {6, 10}) {
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            auto ring = cover_transitivity_module(s);
            CHECK_FALSE(verify_ring_axioms(ring).has_value());
            CHECK(inverse_closed(ring));
        }
    }
}

TEST_CASE("breaking an orbit breaks the ring axioms") {
    auto ring = transitivity_module(ConnectionSet(5, std::vector<int>{1, 4}));
    SchurRing broken = ring;
    broken.basic_sets = IndexPartition({{0}, {1}, {4}, {2, 3}});
    auto violation = verify_ring_axioms(broken);
    REQUIRE(violation.has_value());

    // the singleton partition is the full group ring: always a Schur ring
    SchurRing full;
    full.ambient = AbelianAmbient::cyclic(6);
    full.basic_sets = IndexPartition::singletons(6);
    CHECK_FALSE(verify_ring_axioms(full).has_value());
}

TEST_CASE("radicals") {
    auto amb = AbelianAmbient::cover(10);
    CHECK(radical_of({10, 15}, amb) == std::vector<int>{0, 5});  // rad({a, m+a}) = {0, m}
    CHECK(radical_of({0}, amb) == std::vector<int>{0});
    std::vector<int> whole(20);
    for (int i = 0; i < 20; ++i) whole[i] = i;
    CHECK(radical_of(whole, amb) == whole);
}

TEST_CASE("every basic set is a union of cosets of its radical") {
    for (int n : {6, 10}) {
        for (auto mask : oracles::all_symmetric_sets(n)) {
            auto ring = cover_transitivity_module(ConnectionSet(n, mask));
            for (const auto& block : ring.basic_sets.blocks) {
                auto rad = radical_of(block, ring.ambient);
                // rad is a subgroup
                for (int g : rad)
                    for (int h : rad)
                        CHECK(std::find(rad.begin(), rad.end(), ring.ambient.add(g, h)) !=
                              rad.end());
                CHECK(block.size() % rad.size() == 0);
            }
        }
    }
}

TEST_CASE("instability matches a nontrivial basic set at a (n <= 12)") {
    for (int n = 3; n <= 12; ++n)
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            auto g = build_circulant(s);
            if (!is_connected(g) || is_bipartite(g)) continue;
            auto verdict = classify(s, ClassifyMode::Oracle);
            auto xa = basic_set_a(g);
            CHECK((xa.size() > 1) == verdict.unstable());
        }
}

TEST_CASE("dichotomy check on n = 10 instances") {
    // condition-ii instance: basic-set branch
    auto r1 = dichotomy_check(ConnectionSet(10, std::vector<int>{1, 2, 8, 9}));
    CHECK(r1.branch == DichotomyBranch::BasicSetAm);

    // twin instance (trivially unstable): still the basic-set branch
    auto r2 = dichotomy_check(ConnectionSet(10, std::vector<int>{1, 4, 6, 9}));
    CHECK(r2.branch == DichotomyBranch::BasicSetAm);

    // stable input violates the precondition
    CHECK_THROWS_AS(dichotomy_check(ConnectionSet(10, std::vector<int>{2, 4, 5, 6, 8})),
                    ValidationError);
    // condition-i instance at n = 30 takes the witness branch
    auto r3 = dichotomy_check(ConnectionSet(30, std::vector<int>{2, 8, 12, 15, 18, 22, 28}));
    CHECK(r3.branch == DichotomyBranch::ConditionIWitness);
    CHECK(r3.witness_h == 10);
}

TEST_CASE("dichotomy exercises both branches at n = 30") {
    // m = 15 is odd and composite, so genuine condition-i witnesses exist
    int cond_i = 0, basic = 0;
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 800; ++trial) {
        std::uint64_t mask = 0;
        for (int i = 1; i <= 15; ++i)
            if (rng() % 2) {
                mask |= std::uint64_t{1} << i;
                mask |= std::uint64_t{1} << ((30 - i) % 30);
            }
        if (!mask) continue;
        ConnectionSet s(30, mask);
        auto g = build_circulant(s);
        if (!is_connected(g) || is_bipartite(g)) continue;
        if (!classify(s, ClassifyMode::Oracle).unstable()) continue;
        auto d = dichotomy_check(s);
        CHECK(d.branch != DichotomyBranch::Violation);
        if (d.branch == DichotomyBranch::ConditionIWitness) ++cond_i;
        if (d.branch == DichotomyBranch::BasicSetAm) ++basic;
    }
    CHECK(cond_i > 0);
    CHECK(basic > 0);
}

TEST_CASE("ring json dump") {
    auto ring = transitivity_module(ConnectionSet(5, std::vector<int>{1, 4}));
    CHECK(ring_to_json(ring) == "{\"order\":5,\"basic_sets\":[[0],[1,4],[2,3]]}");
}
