#include <doctest.h>

#include "circstab/connection_set.hpp"
#include "circstab/graph.hpp"
#include "oracles.hpp"

using namespace circstab;

TEST_CASE("connection set validation") {
    CHECK_THROWS_AS(ConnectionSet(6, std::vector<int>{1}), ValidationError);       // -1 = 5 missing
    CHECK_THROWS_AS(ConnectionSet(6, std::vector<int>{0, 3}), ValidationError);    // 0 in S
    CHECK_NOTHROW(ConnectionSet(4, std::vector<int>{1, 2, 3}));                    // 2 = -2
    CHECK_NOTHROW(ConnectionSet(6, std::vector<int>{}));                           // empty is a valid set
    CHECK_THROWS_AS(ConnectionSet(65, std::uint64_t{0}), ValidationError);
}

TEST_CASE("circulant construction") {
    auto c5 = build_circulant(ConnectionSet(5, std::vector<int>{1, 4}));
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // prism: two triangles on the even/odd classes plus the x <-> x+3 matching
    auto prism = build_circulant(ConnectionSet(6, std::vector<int>{2, 3, 4}));
    CHECK(prism.has_edge(0, 2));
    CHECK(prism.has_edge(2, 4));
    CHECK(prism.has_edge(4, 0));
    CHECK(prism.has_edge(1, 3));
    CHECK(prism.has_edge(0, 3));
    CHECK_FALSE(prism.has_edge(0, 1));
    for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);

    // {1, 2} alone is rejected (-1 = 3 missing); the valid K4 set is {1, 2, 3}
    CHECK_THROWS_AS(build_circulant(ConnectionSet(4, std::vector<int>{1, 2})), ValidationError);
    auto k4 = build_circulant(ConnectionSet(4, std::vector<int>{1, 2, 3}));
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
}

TEST_CASE("rotation is always an automorphism") {
    for (int n : {5, 6, 10, 12}) {
        for (auto mask : oracles::all_symmetric_sets(n)) {
            auto g = build_circulant(ConnectionSet(n, mask));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    CHECK(g.has_edge(x, y) == g.has_edge(mod(x + 1, n), mod(y + 1, n)));
        }
    }
}

TEST_CASE("tensor double cover") {
    auto c5 = build_circulant(ConnectionSet(5, std::vector<int>{1, 4}));
    auto c10 = tensor_k2(c5);
    CHECK(c10.vertex_count == 10);
    for (int v = 0; v < 10; ++v) CHECK(c10.degree(v) == 2);
    CHECK(is_connected(c10));  // C5 x K2 = C10

    DenseGraph k2(2);
    k2.add_edge(0, 1);
    auto dbl = tensor_k2(k2);
    CHECK(dbl.edge_count() == 2);
    CHECK_FALSE(is_connected(dbl));  // two disjoint edges

    DenseGraph edgeless(3);
    auto e2 = tensor_k2(edgeless);
    CHECK(e2.vertex_count == 6);
    CHECK(e2.edge_count() == 0);
}

TEST_CASE("tensor double is bipartite; connected iff base connected non-bipartite") {
    for (int n = 3; n <= 12; ++n) {
        for (auto mask : oracles::all_symmetric_sets(n)) {
            auto g = build_circulant(ConnectionSet(n, mask));
            auto cover = tensor_k2(g);
            CHECK(is_bipartite(cover));
            bool expect = is_connected(g) && !is_bipartite(g);
            CHECK(is_connected(cover) == expect);
        }
    }
}

TEST_CASE("connectivity and bipartiteness") {
    CHECK_FALSE(is_connected(build_circulant(ConnectionSet(6, std::vector<int>{3}))));
    CHECK(is_bipartite(build_circulant(ConnectionSet(6, std::vector<int>{1, 5}))));
    auto g = build_circulant(ConnectionSet(10, std::vector<int>{2, 5, 8}));
    CHECK(is_connected(g));
    CHECK_FALSE(is_bipartite(g));
    auto side = bipartition(build_circulant(ConnectionSet(6, std::vector<int>{1, 5})));
    REQUIRE(side.has_value());
    for (int v = 0; v < 6; ++v) CHECK((*side)[v] == v % 2);
}

TEST_CASE("reducedness") {
    ConnectionSet twin(10, std::vector<int>{1, 4, 6, 9});
    CHECK(circulant_reduced_shift(twin) == 5);
    CHECK_FALSE(is_reduced(build_circulant(twin)));

    ConnectionSet k6(6, std::vector<int>{1, 2, 3, 4, 5});
    CHECK_FALSE(circulant_reduced_shift(k6).has_value());
    CHECK(is_reduced(build_circulant(k6)));

    ConnectionSet r(10, std::vector<int>{1, 2, 8, 9});
    CHECK_FALSE(circulant_reduced_shift(r).has_value());
}

TEST_CASE("reduced shift agrees with graph reducedness") {
    for (int n = 3; n <= 12; ++n)
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            CHECK(circulant_reduced_shift(s).has_value() != is_reduced(build_circulant(s)));
        }
}

TEST_CASE("multiplier action on sets") {
    ConnectionSet s(10, std::vector<int>{1, 2, 8, 9});
    CHECK(multiply_set(1, s) == s);
    auto t = multiply_set(3, s);
    CHECK(t.members() == std::vector<int>{3, 4, 6, 7});
    CHECK(t == ConnectionSet(10, s.shifted(5).bits));  // = S + 5, the Thm-type witness
    CHECK(multiply_set(2, ConnectionSet(5, std::vector<int>{1, 4})).members() ==
          std::vector<int>{2, 3});
    CHECK_THROWS_AS(multiply_set(2, s), ValidationError);
}

TEST_CASE("reflective split") {
    auto sp = reflective_split(ConnectionSet(10, std::vector<int>{2, 4, 5, 6, 8}));
    CHECK(sp.reflective.empty());
    CHECK(sp.anti_reflective.members() == std::vector<int>{2, 4, 5, 6, 8});

    auto sp2 = reflective_split(ConnectionSet(10, std::vector<int>{1, 2, 8, 9}));
    CHECK(sp2.reflective.empty());

    auto sp3 = reflective_split(ConnectionSet(6, std::vector<int>{1, 2, 4, 5}));
    CHECK(sp3.reflective.members() == std::vector<int>{1, 2, 4, 5});
    CHECK(sp3.anti_reflective.empty());

    CHECK_THROWS_AS(reflective_split(ConnectionSet(5, std::vector<int>{1, 4})), ValidationError);
}

TEST_CASE("reflective split properties") {
    for (int n : {6, 8, 10, 12, 14})
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            int m = n / 2;
            auto [sr, sa] = reflective_split(s);
            CHECK((sr.bits | sa.bits) == s.bits);
            CHECK((sr.bits & sa.bits) == 0);
            CHECK(sr.shifted(m).bits == sr.bits);
            CHECK((sa.shifted(m).bits & sa.bits) == 0);
        }
}

TEST_CASE("colored quotient by the L-cosets") {
    auto q = quotient_colored(ConnectionSet(10, std::vector<int>{2, 4, 5, 6, 8}));
    CHECK(q.n == 5);
    CHECK(q.members(0).empty());                             // no reflective part
    CHECK(q.members(1) == std::vector<int>{0, 1, 2, 3, 4});  // 5 -> 0, 2/4/6/8 -> classes

    auto q2 = quotient_colored(ConnectionSet(6, std::vector<int>{1, 2, 4, 5}));
    CHECK(q2.members(1).empty());  // all reflective
    CHECK(q2.members(0) == std::vector<int>{1, 2});

    auto q3 = quotient_colored(ConnectionSet(6, std::vector<int>{}));
    CHECK(q3.members(0).empty());
    CHECK(q3.members(1).empty());
}

TEST_CASE("radical of connection sets") {
    CHECK(radical(ConnectionSet(10, std::vector<int>{1, 4, 6, 9})).elements() ==
          std::vector<int>{0, 5});
    CHECK(radical(ConnectionSet(6, std::vector<int>{1, 2, 3, 4, 5})).order() == 1);
    CHECK(radical(ConnectionSet(6, std::vector<int>{})).order() == 6);
    // radical of a colored family is the common stabilizer
    ColoredConnectionSets cs(6, {0b011010, 0b000000});
    // color 0 = {1, 3, 4}: shift by 3 gives {4, 0, 1} != S, so trivial
    CHECK(radical(cs).order() == 1);
}

TEST_CASE("colored digraph reducedness") {
    ColoredConnectionSets loops_ok(5, {0b00011});  // contains 0: loop color, representable
    CHECK(loops_ok.contains(0, 0));
    ColoredConnectionSets twin(6, {std::uint64_t{0b001001} << 1});  // {1, 4}? -> members 1,4? bits 2,8
    // simpler: S = {1, 4} over Z_6 has S + 3 = S
    ColoredConnectionSets t2(6, {(1ull << 1) | (1ull << 4)});
    CHECK(t2.common_shift() == 3);
    CHECK_FALSE(t2.is_reduced());
    ColoredConnectionSets r(6, {(1ull << 1) | (1ull << 4), (1ull << 2)});
    CHECK(r.is_reduced());  // {2} breaks the +3 shift
}
