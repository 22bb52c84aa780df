#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "persimod/complex.hpp"
#include "persimod/oracle.hpp"
#include "persimod/snf.hpp"

using namespace persimod;
using persimod::testing::random_polynomial;

namespace {

RationalField Q;
using QPoly = Polynomial<Rational>;
using QMat = SparseMatrix<QPoly>;

QPoly qparse(const std::string& s) { return parse_polynomial(s, Q); }

std::vector<std::string> divisor_strings(const SnfResult<Rational>& r) {
    std::vector<std::string> out;
    for (const auto& d : r.divisors) out.push_back(d.str());
    return out;
}

}  // namespace

TEST_CASE("triangular monomial matrix") {
    QMat m(2, 2);
    m.set(0, 0, qparse("t"));
    m.set(0, 1, qparse("t^2"));
    m.set(1, 1, qparse("t^3"));
    auto snf = smith_normal_form(m);
    CHECK(divisor_strings(snf) == std::vector<std::string>{"t", "t^3"});
    CHECK(snf.rank == 2);
    CHECK(snf.torsion_exponents() == std::vector<int>{1, 3});
}

TEST_CASE("degenerate shapes") {
    CHECK(smith_normal_form(QMat(0, 0)).rank == 0);
    CHECK(smith_normal_form(QMat(0, 5)).rank == 0);
    CHECK(smith_normal_form(QMat(4, 0)).rank == 0);
    CHECK(smith_normal_form(QMat(3, 3)).divisors.empty());

    QMat unit(1, 1);
    unit.set(0, 0, qparse("7"));
    auto snf = smith_normal_form(unit);
    CHECK(divisor_strings(snf) == std::vector<std::string>{"1"});
}

TEST_CASE("non-monomial entries need the gcd/lcm fix") {
    // diag(t, t+1): divisors 1, t^2+t
    QMat m(2, 2);
    m.set(0, 0, qparse("t"));
    m.set(1, 1, qparse("t+1"));
    auto snf = smith_normal_form(m);
    CHECK(divisor_strings(snf) == std::vector<std::string>{"1", "t^2+t"});

    QMat w(2, 2);
    w.set(0, 0, qparse("t^2-1"));
    w.set(1, 1, qparse("t^3-1"));
    auto snf2 = smith_normal_form(w);
    REQUIRE(snf2.rank == 2);
    CHECK(snf2.divisors[0] == qparse("t-1"));
    CHECK(snf2.divisors[0] * snf2.divisors[1] == (qparse("t^2-1") * qparse("t^3-1")).monic());
    CHECK(snf2.divisors[0].divides(snf2.divisors[1]));
}

TEST_CASE("golden boundary divisors") {
    auto f = parse_filtration(persimod::testing::golden_filtration_text());
    auto c = build_persistence_complex<Rational>(f, Q);
    auto d1 = smith_normal_form(c.boundary(1));
    CHECK(divisor_strings(d1) == std::vector<std::string>{"1", "1", "1", "1", "t", "t", "t^3"});
    auto d2 = smith_normal_form(c.boundary(2));
    CHECK(divisor_strings(d2) == std::vector<std::string>{"t", "t^2", "t^3"});
}

TEST_CASE("random matrices agree with the minor-gcd oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> sides(1, 4);
    std::uniform_int_distribution<int> fill(0, 99);
    for (int iter = 0; iter < 120; ++iter) {
        int rows = sides(rng), cols = sides(rng);
        QMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (fill(rng) < 60) {
                    auto p = random_polynomial<Rational>(rng, Q, 3);
                    if (!p.is_zero()) m.set(i, j, p);
                }
        auto snf = smith_normal_form(m);
        auto expected = minor_gcd_divisors(m);
        REQUIRE(snf.divisors.size() == expected.size());
        for (size_t k = 0; k < expected.size(); ++k) CHECK(snf.divisors[k] == expected[k]);
        for (size_t k = 0; k + 1 < snf.divisors.size(); ++k)
            CHECK(snf.divisors[k].divides(snf.divisors[k + 1]));
        // invariant factors do not change under transpose
        auto snf_t = smith_normal_form(m.transposed());
        CHECK(divisor_strings(snf_t) == divisor_strings(snf));
    }
}
