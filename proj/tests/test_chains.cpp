#include <doctest.h>

#include <random>

#include "circstab/chains.hpp"
#include "circstab/replacement.hpp"
#include "circstab/twofold.hpp"
#include "oracles.hpp"

using namespace circstab;

namespace {
ColoredConnectionSets dicay(int m, std::vector<std::vector<int>> color_sets) {
    std::vector<std::uint64_t> masks;
    for (const auto& cs : color_sets) {
        std::uint64_t mask = 0;
        for (int s : cs) mask |= std::uint64_t{1} << mod(s, m);
        masks.push_back(mask);
    }
    return ColoredConnectionSets(m, std::move(masks));
}

Perm rotation(int m, int r) {
    std::vector<std::uint8_t> img(m);
    for (int x = 0; x < m; ++x) img[x] = static_cast<std::uint8_t>(mod(x + r, m));
    return Perm(std::move(img));
}

Perm negation(int m) {
    std::vector<std::uint8_t> img(m);
    for (int x = 0; x < m; ++x) img[x] = static_cast<std::uint8_t>(mod(-x, m));
    return Perm(std::move(img));
}
}  // namespace

TEST_CASE("chain propagation on the directed 5-cycle") {
    auto g = dicay(5, {{1}});

    auto id_cert = chain_extend(g, Perm::identity(5));
    REQUIRE(id_cert.has_value());
    CHECK(id_cert->period() == 1);
    CHECK(id_cert->revalidate());

    auto rot_cert = chain_extend(g, rotation(5, 2));
    REQUIRE(rot_cert.has_value());
    CHECK(rot_cert->period() == 1);  // rotations commute with shifts
    CHECK(gamma_chain(g, rotation(5, 2)) == rotation(5, 2));

    // reflection extends with sigma_j(x) = -x + 2j, period 5
    auto refl_cert = chain_extend(g, negation(5));
    REQUIRE(refl_cert.has_value());
    CHECK(refl_cert->period() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(refl_cert->layer(j) == rotation(5, 2 * j) * negation(5));
    }
    CHECK(refl_cert->revalidate());
}

TEST_CASE("chain_extend errors and failures") {
    // non-reduced digraph: {1, 4} over Z_6 has the common shift 3
    auto twin = dicay(6, {{1, 4}});
    CHECK_THROWS_AS(chain_extend(twin, Perm::identity(6)), ValidationError);

    // a permutation that does not extend: transposition on the 5-cycle
    auto g = dicay(5, {{1}});
    // all permutations extend for a single full-shift color, so use two colors
    auto g2 = dicay(5, {{1}, {2}});
    CHECK_FALSE(chain_extend(g2, Perm{1, 0, 2, 3, 4}).has_value());
    CHECK(chain_extend(g2, rotation(5, 1)).has_value());
}

TEST_CASE("aut_ch enumeration matches the window group when every pair extends") {
    auto g = dicay(5, {{1}});
    auto certs = aut_ch_enumerate(g);
    CHECK(certs.size() == 120);  // every sigma0 extends for a single shift color
    for (const auto& c : certs) CHECK(5 % c.period() == 0);

    // two incommensurate colors cut Aut^Ch down to the rotations
    auto g2 = dicay(5, {{1}, {2}});
    auto certs2 = aut_ch_enumerate(g2);
    CHECK(certs2.size() == 5);
}

TEST_CASE("gamma power law and unit conjugation") {
    for (auto& g : {dicay(5, {{1}}), dicay(5, {{1}, {2}}), dicay(7, {{1, 2, 4}}),
                    dicay(9, {{1, 2}, {3}})}) {
        auto report = verify_gamma_power_law(g);
        CHECK(report.ok());
        CHECK(report.aut_ch_count > 0);
    }
}

TEST_CASE("multiplier transport") {
    auto g = dicay(7, {{1, 2, 4}});
    auto cert = chain_extend(g, negation(7) * rotation(7, 3));
    if (!cert) cert = chain_extend(g, rotation(7, 1));
    REQUIRE(cert.has_value());

    // l = 1: identity transport
    auto t1 = multiplier_transport(*cert, 1);
    CHECK(t1.layers == cert->layers);

    // l = m + 1 leaves the digraph unchanged (lS = S)
    auto t8 = multiplier_transport(*cert, 8);
    CHECK(t8.base == g);
    CHECK(t8.revalidate());

    // l = 2: 2S = S here, transported certificate must pass
    auto t2 = multiplier_transport(*cert, 2);
    CHECK(t2.revalidate());
    CHECK_THROWS_AS(multiplier_transport(*cert, 7), ValidationError);
}

TEST_CASE("transport composes along multipliers") {
    auto g = dicay(9, {{1, 2}});
    auto certs = aut_ch_enumerate(g);
    REQUIRE(!certs.empty());
    const auto& cert = certs.front();
    for (int l1 : units(9))
        for (int l2 : units(9)) {
            auto a = multiplier_transport(multiplier_transport(cert, l1), l2);
            auto b = multiplier_transport(cert, mod(l1 * l2, 9));
            CHECK(a.base == b.base);
            // same bi-infinite sequence: compare over a common window
            for (int j = 0; j < 18; ++j) CHECK(a.layer(j) == b.layer(j));
        }
}

TEST_CASE("proper path census mod p") {
    auto g = dicay(5, {{1}});
    CHECK(proper_path_census(g, 0, 3, 0, 3) == 1);  // 3 = 3*1
    CHECK(proper_path_census(g, 0, 3, 0, 1) == 0);

    auto g2 = dicay(5, {{1, 4}});
    CHECK(proper_path_census(g2, 0, 2, 0, 2) % 2 == 1);  // 2 = 2*1

    // census equals 1 exactly on p*S_j, 0 elsewhere, for several digraphs
    for (auto& gg : {dicay(7, {{1, 2, 4}}), dicay(9, {{1, 2}}), dicay(5, {{1, 4}})}) {
        for (int p : {2, 5, 7}) {
            if (gcd(p, gg.n) != 1) continue;
            for (int d = 0; d < gg.n; ++d) {
                bool in_ps = false;
                for (int s = 0; s < gg.n; ++s)
                    if (gg.contains(0, s) && mod(p * s, gg.n) == d) in_ps = true;
                CHECK(proper_path_census(gg, 0, p, 0, d) == (in_ps ? 1 : 0));
            }
        }
    }
}

TEST_CASE("undirected chains agree with the twofold machinery (n <= 12)") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 12; ++n) {
        for (auto mask : oracles::all_symmetric_sets(n)) {
            ConnectionSet s(n, mask);
            auto g = build_circulant(s);
            if (!is_connected(g) || is_bipartite(g) || circulant_reduced_shift(s)) continue;
            auto tf = tf_group(g);
            auto proj = tf.projections();
            ColoredConnectionSets colored(n, {s.bits});
            ChainPropagator prop(colored);

            // every Aut^pi element is a chain projection with matching gamma;
            // walk small groups fully, sample the rest
            std::vector<Perm> sample;
            if (proj.order() <= 2000) {
                sample = proj.elements(2048);
            } else {
                for (const auto& p : tf.generator_pairs) sample.push_back(p.sigma1);
                for (int i = 0; i < 20; ++i) sample.push_back(proj.random_element(rng));
            }
            for (const auto& sigma : sample) {
                auto cert = chain_extend(prop, sigma);
                REQUIRE(cert.has_value());
                CHECK(cert->layer(1) == gamma_partner(g, sigma));
            }
            // and |Aut^Ch| = |Aut^pi| when the window group is walkable
            auto window = GeneratedGroup::from_generators(
                2 * n, automorphism_generators(chain_window_graph(colored)));
            if (window.order() <= 5000)
                CHECK(aut_ch_enumerate(colored).size() ==
                      static_cast<std::size_t>(proj.order()));
        }
    }
}

TEST_CASE("replacement property at reference instances") {
    // n = 15, |H| = 3 (H = <5>), full kernel enumeration
    auto r1 = replacement_verify(ConnectionSet(15, std::vector<int>{1, 4, 11, 14}),
                                 CyclicSubgroup(15, 5));
    CHECK(r1.coprime);
    CHECK(r1.mode == "full");
    CHECK(r1.checked > 0);
    CHECK(r1.all_passed());

    // n = 30, H = <10> (order 3), sampled mode forced by a tiny cap
    auto r2 = replacement_verify(ConnectionSet(30, std::vector<int>{3, 10, 15, 20, 27}),
                                 CyclicSubgroup(30, 10), 100, false, /*full_cap=*/1);
    CHECK(r2.mode == "sampled");
    CHECK(r2.all_passed());

    // n = 10, |H| = 5 (H = 2Z_10)
    auto r3 = replacement_verify(ConnectionSet(10, std::vector<int>{1, 2, 8, 9}),
                                 CyclicSubgroup(10, 2));
    CHECK(r3.all_passed());
}

TEST_CASE("replacement rejects non-coprime subgroups unless probing") {
    ConnectionSet s(12, std::vector<int>{1, 11});
    CyclicSubgroup h(12, 6);  // order 2, n/|H| = 6, gcd = 2
    CHECK_THROWS_AS(replacement_verify(s, h), ValidationError);
    auto probe = replacement_verify(s, h, 50, /*probe=*/true);
    CHECK(probe.checked > 0);  // informative only; failures permitted
}

TEST_CASE("replacement report serializes with fixed key order") {
    auto r = replacement_verify(ConnectionSet(15, std::vector<int>{1, 4, 11, 14}),
                                CyclicSubgroup(15, 5));
    auto json = replacement_report_to_json(r);
    CHECK(json.starts_with("{\"n\":15,\"set\":\"15:1,4,11,14\",\"H\":3,"));
    CHECK(json.find("\"mode\":\"full\"") != std::string::npos);
    CHECK(json.ends_with("\"failures\":[]}"));
}

TEST_CASE("translations by H always pass replacement") {
    ConnectionSet s(15, std::vector<int>{3, 5, 10, 12});
    CyclicSubgroup h(15, 5);
    auto g = build_circulant(s);
    auto report = replacement_verify(s, h);
    CHECK(report.all_passed());
    auto kernel = partition_kernel(g, coset_partition(h));
    for (int t : h.elements()) CHECK(kernel.contains(rotation(15, t)));
}
