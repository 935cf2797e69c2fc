#include <doctest.h>

#include "circstab/zn.hpp"

using namespace circstab;

TEST_CASE("units of Z_n") {
    CHECK(units(1).empty());
    CHECK(units(10) == std::vector<int>{1, 3, 7, 9});
    CHECK(units(12) == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("squarefree predicate") {
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1));
    CHECK_FALSE(is_squarefree(4));
    CHECK_THROWS_AS(is_squarefree(0), ValidationError);
}

TEST_CASE("crt split basics") {
    CrtSplit phi(15, 3);
    CHECK(phi.to_zn(1, 0) == 5);
    CHECK(phi.to_zn(0, 0) == 0);
    CHECK(phi.left_subgroup().order() == 3);

    CrtSplit phi10(10, 5);
    CHECK(phi10.to_zn(2, 1) == 9);

    CHECK_THROWS_AS(CrtSplit(12, 2), ValidationError);  // gcd(2, 6) != 1
    CHECK_THROWS_AS(CrtSplit(10, 3), ValidationError);  // 3 does not divide 10
}

TEST_CASE("crt split is a bijective homomorphism") {
    for (auto [n, l1] : {std::pair{15, 3}, {10, 2}, {30, 5}, {21, 7}, {6, 2}}) {
        CrtSplit phi(n, l1);
        std::vector<char> hit(n, 0);
        for (int x = 0; x < phi.l1; ++x)
            for (int y = 0; y < phi.l2; ++y) {
                int v = phi.to_zn(x, y);
                CHECK_FALSE(hit[v]);
                hit[v] = 1;
                auto [bx, by] = phi.from_zn(v);
                CHECK(bx == x);
                CHECK(by == y);
            }
        // additivity on all pairs
        for (int x1 = 0; x1 < phi.l1; ++x1)
            for (int y1 = 0; y1 < phi.l2; ++y1)
                for (int x2 = 0; x2 < phi.l1; ++x2)
                    for (int y2 = 0; y2 < phi.l2; ++y2)
                        CHECK(mod(phi.to_zn(x1, y1) + phi.to_zn(x2, y2), n) ==
                              phi.to_zn(mod(x1 + x2, phi.l1), mod(y1 + y2, phi.l2)));
        // image of the left factor is the order-l1 subgroup
        auto h = phi.left_subgroup();
        for (int x = 0; x < phi.l1; ++x) CHECK(h.contains(phi.to_zn(x, 0)));
    }
}

TEST_CASE("coset partitions") {
    auto p = coset_partition(CyclicSubgroup(6, 3));
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[0] == std::vector<int>{0, 3});
    CHECK(p.blocks[1] == std::vector<int>{1, 4});
    CHECK(p.blocks[2] == std::vector<int>{2, 5});

    auto even = coset_partition(CyclicSubgroup(10, 2));
    REQUIRE(even.blocks.size() == 2);
    CHECK(even.blocks[0] == std::vector<int>{0, 2, 4, 6, 8});
    CHECK(even.blocks[1] == std::vector<int>{1, 3, 5, 7, 9});

    auto full = coset_partition(CyclicSubgroup(5, 1));
    CHECK(full.blocks.size() == 1);
    CHECK(full.blocks[0].size() == 5);
}

TEST_CASE("coset partitions refine consistently") {
    // partition by d1 fragments partition by d2 whenever d2 | d1
    for (int n : {12, 30, 16}) {
        for (int d1 = 1; d1 <= n; ++d1) {
            if (n % d1) continue;
            for (int d2 = 1; d2 <= d1; ++d2) {
                if (d1 % d2 || n % d2) continue;
                auto fine = coset_partition(CyclicSubgroup(n, d1));
                auto coarse = coset_partition(CyclicSubgroup(n, d2));
                CHECK(fine.is_fragmentation_of(coarse));
            }
        }
    }
}

TEST_CASE("index partition canonical form") {
    IndexPartition p({{4, 1}, {3, 0}, {2}});
    CHECK(p.blocks == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2}});
    CHECK(p.covers(5));
    CHECK_FALSE(p.covers(6));
    CHECK(IndexPartition::singletons(3).is_fragmentation_of(IndexPartition::one_block(3)));
    CHECK_FALSE(IndexPartition::one_block(3).is_fragmentation_of(IndexPartition::singletons(3)));
}

TEST_CASE("residues and subgroups validate") {
    CHECK(Residue(-1, 10).value == 9);
    CHECK((Residue(7, 10) + Residue(8, 10)).value == 5);
    CHECK_THROWS_AS(CyclicSubgroup(10, 3), ValidationError);
    CHECK(CyclicSubgroup(10, 10).order() == 1);  // trivial subgroup
    CHECK(CyclicSubgroup(10, 1).order() == 10);  // full group
}
