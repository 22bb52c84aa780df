#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "persimod/oracle.hpp"

using namespace persimod;
using persimod::testing::descriptor;

namespace {

RationalField Q;
using QDesc = ModuleDescriptor<Rational>;
using QPoly = Polynomial<Rational>;

QDesc desc(long r, const std::vector<int>& exps) { return descriptor<Rational>(r, exps, Q); }

std::vector<QDesc> small_descriptors() {
    return {desc(0, {}), desc(1, {}), desc(2, {}), desc(0, {2}), desc(1, {2}), desc(0, {1, 2}), desc(2, {2, 3})};
}

}  // namespace

TEST_CASE("presentations of descriptors") {
    auto m = desc(2, {2, 3});
    auto p = present(m);
    CHECK(p.gens == 4);
    CHECK(p.rels.rows() == 4);
    CHECK(p.rels.cols() == 2);
    CHECK(p.rels.get(2, 0) == QPoly::monomial(Rational(1), 2));
    CHECK(p.rels.get(3, 1) == QPoly::monomial(Rational(1), 3));

    for (const auto& d : small_descriptors()) CHECK(descriptor_of(present(d)) == d);

    QDesc huge;
    huge.free_rank = mpz_class("100000000000000000000");
    CHECK_THROWS_AS(present(huge), Error);
}

TEST_CASE("tensor products of presented modules") {
    auto rt = present(desc(0, {1}));
    auto rt2 = present(desc(0, {2}));
    CHECK(descriptor_of(oracle_tensor(rt, rt2)) == desc(0, {1}));

    CHECK(descriptor_of(oracle_tensor(present(desc(2, {})), present(desc(3, {})))) == desc(6, {}));

    auto p = present(desc(1, {2}));
    CHECK(descriptor_of(oracle_tensor(p, p)) == desc(1, {2, 2, 2}));

    // commutativity and associativity of the construction, on descriptors
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> rr(0, 2);
    std::uniform_int_distribution<int> ee(1, 3), cnt(0, 2);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<int> e1, e2;
        for (int i = cnt(rng); i > 0; --i) e1.push_back(ee(rng));
        for (int i = cnt(rng); i > 0; --i) e2.push_back(ee(rng));
        auto a = present(desc(rr(rng), e1)), b = present(desc(rr(rng), e2));
        CHECK(descriptor_of(oracle_tensor(a, b)) == descriptor_of(oracle_tensor(b, a)));
        auto c = present(desc(1, {2}));
        CHECK(descriptor_of(oracle_tensor(oracle_tensor(a, b), c)) ==
              descriptor_of(oracle_tensor(a, oracle_tensor(b, c))));
    }

    CHECK_THROWS_AS(oracle_tensor(present(desc(3, {})), present(desc(3, {})), 8), Error);
}

TEST_CASE("brute-force powers match the closed forms") {
    SUBCASE("plain tensor mode") {
        for (const auto& m : small_descriptors()) {
            CHECK(oracle_power(m, 1, OracleMode::tensor, Q) == m);
            for (int n = 0; n <= 3; ++n)
                CHECK(oracle_power(m, n, OracleMode::tensor, Q) == tensor_power(m, n));
        }
    }

    SUBCASE("group mode with the full symmetric group") {
        for (const auto& m : small_descriptors()) {
            for (int n = 1; n <= 3; ++n) {
                auto g = PermGroup::symmetric(n);
                CHECK(oracle_power(m, n, OracleMode::group, Q, &g) == symmetric_power(m, n));
            }
        }
        auto s2 = PermGroup::symmetric(2);
        CHECK(oracle_power(desc(0, {1, 2}), 2, OracleMode::group, Q, &s2) == desc(0, {1, 1, 2}));
    }

    SUBCASE("group mode with rotations") {
        auto c3 = PermGroup::cyclic(3);
        CHECK(oracle_power(desc(0, {2, 3}), 3, OracleMode::group, Q, &c3) == desc(0, {2, 2, 2, 3}));
        CHECK(oracle_power(desc(2, {}), 3, OracleMode::group, Q, &c3) == desc(4, {}));
        for (const auto& m : small_descriptors())
            CHECK(oracle_power(m, 3, OracleMode::group, Q, &c3) == g_power(m, 3, c3));
    }

    SUBCASE("exterior mode") {
        CHECK(oracle_power(desc(0, {1, 2}), 2, OracleMode::exterior, Q) == desc(0, {1}));
        CHECK(oracle_power(desc(0, {1, 2}), 3, OracleMode::exterior, Q).is_zero());
        for (long r = 0; r <= 3; ++r)
            for (int n = 0; n <= 3; ++n)
                CHECK(oracle_power(desc(r, {}), n, OracleMode::exterior, Q) == desc(binomial(r, n).get_si(), {}));
        for (const auto& m : small_descriptors())
            for (int n = 0; n <= 2; ++n)
                CHECK(oracle_power(m, n, OracleMode::exterior, Q) == exterior_power(m, n));
    }

    SUBCASE("argument checks") {
        auto c3 = PermGroup::cyclic(3);
        CHECK_THROWS_AS(oracle_power(desc(1, {}), 2, OracleMode::group, Q, &c3), Error);
        CHECK_THROWS_AS(oracle_power(desc(1, {}), 2, OracleMode::group, Q), Error);
        CHECK_THROWS_AS(oracle_power(desc(1, {}), -1, OracleMode::tensor, Q), Error);
        CHECK_THROWS_AS(oracle_power(desc(2, {2, 3}), 4, OracleMode::tensor, Q, nullptr, 100), Error);
    }
}

TEST_CASE("orbit enumeration") {
    SUBCASE("trivial group leaves singletons") {
        auto orbits = enumerate_orbits(PermGroup::trivial(2), 3);
        REQUIRE(orbits.size() == 9);
        for (long i = 0; i < 9; ++i) CHECK(orbits[i] == std::vector<long>{i});
    }

    SUBCASE("rotations of three bits") {
        auto orbits = enumerate_orbits(PermGroup::cyclic(3), 2);
        REQUIRE(orbits.size() == 4);
        CHECK(orbits[0] == std::vector<long>{0});
        CHECK(orbits[1] == std::vector<long>{1, 2, 4});
        CHECK(orbits[2] == std::vector<long>{3, 5, 6});
        CHECK(orbits[3] == std::vector<long>{7});
    }

    SUBCASE("symmetric group orbits are multisets") {
        for (long s = 0; s <= 3; ++s)
            for (int n = 1; n <= 4; ++n)
                CHECK(mpz_class((long)enumerate_orbits(PermGroup::symmetric(n), s).size()) ==
                      multiset_count(s, n));
    }

    SUBCASE("orbits partition the function space") {
        std::mt19937 rng(43);
        for (int iter = 0; iter < 12; ++iter) {
            std::uniform_int_distribution<int> nn(1, 5);
            std::uniform_int_distribution<long> ss(1, 3);
            int n = nn(rng);
            long s = ss(rng);
            std::vector<int> p1(n), p2(n);
            for (int i = 0; i < n; ++i) p1[i] = p2[i] = i;
            std::shuffle(p1.begin(), p1.end(), rng);
            std::shuffle(p2.begin(), p2.end(), rng);
            PermGroup g(n, {p1, p2});
            auto orbits = enumerate_orbits(g, s);
            std::set<long> all;
            size_t covered = 0;
            for (const auto& o : orbits) {
                covered += o.size();
                all.insert(o.begin(), o.end());
            }
            CHECK(mpz_class((long)covered) == power(mpz_class(s), n));
            CHECK(all.size() == covered);
            CHECK(mpz_class((long)orbits.size()) == burnside_count(g, s));
        }
    }

    SUBCASE("cap") {
        CHECK_THROWS_AS(enumerate_orbits(PermGroup::trivial(10), 10, 1000), Error);
    }
}

TEST_CASE("snapshot homology ranks") {
    auto f = parse_filtration(persimod::testing::golden_filtration_text());
    CHECK(snapshot_homology<Rational>(f, 0, 0, Q) == 3);
    CHECK(snapshot_homology<Rational>(f, 0, 4, Q) == 1);
    CHECK(snapshot_homology<Rational>(f, 1, 2, Q) == 4);
    CHECK(snapshot_homology<Rational>(f, 2, 4, Q) == 1);
    CHECK(snapshot_homology<Rational>(f, 2, 3, Q) == 0);
    CHECK(snapshot_homology<Rational>(f, 3, 4, Q) == 0);
    CHECK(snapshot_homology<Rational>(f, -1, 4, Q) == 0);

    auto pt = parse_filtration("steps 0\na 0\n");
    CHECK(snapshot_homology<Rational>(pt, 0, 0, Q) == 1);

    PrimeField F2(2);
    CHECK(snapshot_homology<Fp>(f, 1, 2, F2) == 4);
}

TEST_CASE("invariant factors from minors") {
    auto t = [&](int e) { return QPoly::monomial(Rational(1), e); };
    SparseMatrix<QPoly> m(2, 2);
    m.set(0, 0, t(1));
    m.set(0, 1, t(2));
    m.set(1, 1, t(3));
    auto div = minor_gcd_divisors(m);
    REQUIRE(div.size() == 2);
    CHECK(div[0] == t(1));
    CHECK(div[1] == t(3));

    SparseMatrix<QPoly> z(3, 2);
    CHECK(minor_gcd_divisors(z).empty());

    SparseMatrix<QPoly> big(6, 6);
    CHECK_THROWS_AS(minor_gcd_divisors(big), Error);
}
