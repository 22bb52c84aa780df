#include <map>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "persimod/complex.hpp"

using namespace persimod;

namespace {

using QPoly = Polynomial<Rational>;
using Entries = std::map<std::pair<int, int>, QPoly>;

QPoly mono(long c, int e) { return QPoly::monomial(Rational(c), e); }

}  // namespace

TEST_CASE("boundary matrices of the eight-vertex example") {
    RationalField Q;
    auto f = parse_filtration(persimod::testing::golden_filtration_text());
    auto c = build_persistence_complex<Rational>(f, Q);

    CHECK(c.top() == 2);
    CHECK(c.size(0) == 8);
    CHECK(c.size(1) == 11);
    CHECK(c.size(2) == 4);
    CHECK(c.size(3) == 0);
    CHECK(c.max_generator_degree() == 4);

    // generators sorted by (birth, declaration): vertices a b c e f g d h
    CHECK(c.degrees(0) == std::vector<int>{0, 0, 0, 0, 0, 0, 1, 1});
    // edges ab ac eg bd cd ef fg eh fh gh de
    CHECK(c.degrees(1) == std::vector<int>{0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 3});
    // triangles fgh efg efh egh
    CHECK(c.degrees(2) == std::vector<int>{3, 4, 4, 4});

    Entries d1 = {
        {{0, 0}, mono(-1, 0)}, {{1, 0}, mono(1, 0)},   // ab
        {{0, 1}, mono(-1, 0)}, {{2, 1}, mono(1, 0)},   // ac
        {{3, 2}, mono(-1, 0)}, {{5, 2}, mono(1, 0)},   // eg
        {{1, 3}, mono(-1, 1)}, {{6, 3}, mono(1, 0)},   // bd
        {{2, 4}, mono(-1, 1)}, {{6, 4}, mono(1, 0)},   // cd
        {{3, 5}, mono(-1, 1)}, {{4, 5}, mono(1, 1)},   // ef
        {{4, 6}, mono(-1, 1)}, {{5, 6}, mono(1, 1)},   // fg
        {{3, 7}, mono(-1, 2)}, {{7, 7}, mono(1, 1)},   // eh
        {{4, 8}, mono(-1, 2)}, {{7, 8}, mono(1, 1)},   // fh
        {{5, 9}, mono(-1, 2)}, {{7, 9}, mono(1, 1)},   // gh
        {{6, 10}, mono(-1, 2)}, {{3, 10}, mono(1, 3)}  // de
    };
    CHECK(c.boundary(1).entries() == d1);

    Entries d2 = {
        {{9, 0}, mono(1, 1)}, {{8, 0}, mono(-1, 1)}, {{6, 0}, mono(1, 2)},  // fgh
        {{6, 1}, mono(1, 3)}, {{2, 1}, mono(-1, 4)}, {{5, 1}, mono(1, 3)},  // efg
        {{8, 2}, mono(1, 2)}, {{7, 2}, mono(-1, 2)}, {{5, 2}, mono(1, 3)},  // efh
        {{9, 3}, mono(1, 2)}, {{7, 3}, mono(-1, 2)}, {{2, 3}, mono(1, 4)}   // egh
    };
    CHECK(c.boundary(2).entries() == d2);

    CHECK((c.boundary(1) * c.boundary(2)).is_zero_matrix());
    CHECK_NOTHROW(c.check());

    // same construction over a prime field still satisfies the axioms
    PrimeField F2(2);
    auto c2 = build_persistence_complex<Fp>(f, F2);
    CHECK(c2.size(1) == 11);
    CHECK((c2.boundary(1) * c2.boundary(2)).is_zero_matrix());
}

TEST_CASE("snapshot complexes and specialization at t = 1") {
    RationalField Q;
    auto f = parse_filtration(persimod::testing::golden_filtration_text());
    auto c = build_persistence_complex<Rational>(f, Q);

    auto s4 = snapshot_complex<Rational>(f, 4, Q);
    CHECK(s4.sizes == std::vector<int>{8, 11, 4});
    auto spec = c.at_t_one();
    REQUIRE((int)spec.size() == c.top() + 1);
    for (int n = 0; n <= c.top(); ++n) CHECK(spec[n] == s4.boundary(n));

    auto s0 = snapshot_complex<Rational>(f, 0, Q);
    CHECK(s0.sizes == std::vector<int>{6, 3});
    CHECK(s0.euler_characteristic() == 3);

    auto s2 = snapshot_complex<Rational>(f, 2, Q);
    CHECK(s2.sizes == std::vector<int>{8, 10});

    CHECK_THROWS_AS(snapshot_complex<Rational>(f, 5, Q), Error);
    CHECK_THROWS_AS(snapshot_complex<Rational>(f, -1, Q), Error);
}

TEST_CASE("wrapping a plain complex into the graded one") {
    RationalField Q;

    SUBCASE("entries pick up the degree difference") {
        SparseMatrix<Rational> d1(1, 1);
        d1.set(0, 0, Rational(3));
        auto c = load_filtered_complex<Rational>({{0}, {2}}, {SparseMatrix<Rational>(0, 1), d1}, Q);
        CHECK(c.boundary(1).get(0, 0) == mono(3, 2));
    }

    SUBCASE("negative generator degree is rejected") {
        CHECK_THROWS_AS(load_filtered_complex<Rational>({{-1}}, {SparseMatrix<Rational>(0, 1)}, Q), Error);
    }

    SUBCASE("generator mapped onto a later one is rejected") {
        SparseMatrix<Rational> d1(1, 1);
        d1.set(0, 0, Rational(1));
        try {
            load_filtered_complex<Rational>({{2}, {0}}, {SparseMatrix<Rational>(0, 1), d1}, Q);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::grading);
        }
    }

    SUBCASE("nonzero boundary square is rejected") {
        // 1 <- 1 <- 1 chain with identity maps
        SparseMatrix<Rational> m(1, 1);
        m.set(0, 0, Rational(1));
        try {
            load_filtered_complex<Rational>({{0}, {0}, {0}}, {SparseMatrix<Rational>(0, 1), m, m}, Q);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::boundary_square);
        }
    }
}

TEST_CASE("generic complex text format") {
    RationalField Q;

    SUBCASE("round trip with degree shifts") {
        std::string text =
            "# two generators in degree 0, one in degree 1\n"
            "gens 0: 0 2\n"
            "gens 1: 2\n"
            "boundary 1:\n"
            "0 0 1   # becomes t^2\n"
            "1 0 -1  # stays scalar\n";
        auto c = parse_generic_complex<Rational>(text, Q);
        CHECK(c.top() == 1);
        CHECK(c.degrees(0) == std::vector<int>{0, 2});
        CHECK(c.boundary(1).get(0, 0) == mono(1, 2));
        CHECK(c.boundary(1).get(1, 0) == mono(-1, 0));
    }

    SUBCASE("parse errors carry line numbers") {
        auto code_of = [&](const std::string& text, int* line = nullptr) {
            try {
                parse_generic_complex<Rational>(text, Q);
            } catch (const Error& e) {
                if (line) *line = e.line();
                return e.code();
            }
            return Errc::internal;
        };
        int line = 0;
        CHECK(code_of("") == Errc::syntax);
        CHECK(code_of("0 0 1\n", &line) == Errc::syntax);  // entry before any block
        CHECK(line == 1);
        CHECK(code_of("gens 0: 0\ngens 0: 0\n", &line) == Errc::syntax);
        CHECK(line == 2);
        CHECK(code_of("gens 0: 0\nboundary 0:\n", &line) == Errc::syntax);
        CHECK(line == 2);
        CHECK(code_of("gens 0: 0\ngens 1: 0\nboundary 1:\n0 0 x\n", &line) == Errc::syntax);
        CHECK(line == 4);
        CHECK(code_of("gens 0: 0\ngens 1: 0\nboundary 1:\n2 0 1\n", &line) == Errc::syntax);
        CHECK(line == 4);
        CHECK(code_of("gens 0: 0\nboundary 2:\n") == Errc::syntax);  // no generators in degree 2
        CHECK(code_of("gens 0: -3\n", &line) == Errc::syntax);
        CHECK(line == 1);
    }

    SUBCASE("field values are parsed in the requested field") {
        PrimeField F5(5);
        auto c = parse_generic_complex<Fp>("gens 0: 0\ngens 1: 1\nboundary 1:\n0 0 7\n", F5);
        CHECK(c.boundary(1).get(0, 0) == Polynomial<Fp>::monomial(F5.from_long(2), 1));
    }
}

TEST_CASE("dual complex") {
    RationalField Q;
    auto f = parse_filtration(persimod::testing::golden_filtration_text());
    auto c = build_persistence_complex<Rational>(f, Q);
    auto d = dualize(c);

    CHECK(d.top() == 2);
    CHECK(d.size(0) == 4);   // dual of top degree
    CHECK(d.size(1) == 11);
    CHECK(d.size(2) == 8);
    // degrees reflect through the maximum (4): triangles at 3,4,4,4 -> 1,0,0,0
    CHECK(d.degrees(0) == std::vector<int>{1, 0, 0, 0});
    CHECK(d.boundary(1) == c.boundary(2).transposed());
    CHECK(d.boundary(2) == c.boundary(1).transposed());
    CHECK_NOTHROW(d.check());

    // the minimum degree here is 0, so dualizing twice is the identity
    auto dd = dualize(d);
    for (int n = 0; n <= c.top(); ++n) {
        CHECK(dd.degrees(n) == c.degrees(n));
        CHECK(dd.boundary(n) == c.boundary(n));
    }
}

TEST_CASE("random filtrations satisfy the complex axioms") {
    RationalField Q;
    PrimeField F3(3);
    std::mt19937 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        auto f = persimod::testing::random_filtration(rng);
        auto c = build_persistence_complex<Rational>(f, Q);
        CHECK_NOTHROW(c.check());
        CHECK_NOTHROW(dualize(c).check());
        auto cp = build_persistence_complex<Fp>(f, F3);
        CHECK_NOTHROW(cp.check());
        // snapshot at every step stays a complex
        for (int k = 0; k <= f.last_step(); ++k) {
            auto s = snapshot_complex<Rational>(f, k, Q);
            for (int n = 1; n + 1 <= s.top(); ++n)
                CHECK((s.boundary(n) * s.boundary(n + 1)).is_zero_matrix());
        }
    }
}
