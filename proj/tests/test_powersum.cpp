#include <doctest.h>

#include <random>

#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

using namespace stirsum;

namespace {

std::vector<FormulaId> all_formula_ids(long r, long m, long n) {
    return {
        {Formula::Brute, 0}, {Formula::F1, 0},    {Formula::F2, 0},   {Formula::Th1, r},
        {Formula::Th2, r},   {Formula::Reqn, 0},  {Formula::Reqn1, 0}, {Formula::NegN, 0},
        {Formula::Con1, m},  {Formula::Con2, std::min(m, n)}, {Formula::Con3, 0},
        {Formula::Harmonic, 0},
    };
}

}  // namespace

TEST_CASE("brute-force power sums") {
    CHECK(powersum_brute(3, 0) == 0);
    CHECK(powersum_brute(0, 7) == 7);
    CHECK(powersum_brute(2, 3) == 14);
    CHECK(powersum_brute(5, 10) == 220825);
    CHECK_THROWS_AS(powersum_brute(-1, 3), std::domain_error);
}

TEST_CASE("classic Stirling forms f1 and f2") {
    CHECK(powersum_f1(0, 4) == 4);
    CHECK(powersum_f1(1, 3) == 6);
    CHECK(powersum_f1(2, 3) == 14);
    CHECK(powersum_f2(2, 3) == 14);
    CHECK(powersum_f2(3, 2) == 9);
    for (long k = 0; k <= 12; ++k)
        for (long n = 0; n <= 20; ++n) {
            ExactInt want = powersum_brute(k, n);
            CHECK(powersum_f1(k, n) == want);
            CHECK(powersum_f2(k, n) == want);
        }
}

TEST_CASE("the two infinite families") {
    CHECK(powersum_th1(2, 3, 0) == 14);  // r=0 collapses to f1
    CHECK(powersum_th1(2, 3, 2) == 14);
    CHECK(powersum_th1(3, 2, 1) == 9);   // r=1 collapses to f2
    CHECK(powersum_th2(2, 2, 1) == 5);
    CHECK(powersum_th2(4, 3, 0) == 98);
    CHECK(powersum_th2(0, 5, 3) == 5);
    for (long k = 0; k <= 10; ++k)
        for (long n = 0; n <= 14; ++n)
            for (long r = 0; r <= 8; ++r) {
                ExactInt want = powersum_brute(k, n);
                CHECK(powersum_th1(k, n, r) == want);
                CHECK(powersum_th2(k, n, r) == want);
            }
}

TEST_CASE("specializations reqn, reqn1, negn") {
    CHECK(powersum_special(2, 2, Formula::Reqn) == 5);
    CHECK(powersum_special(1, 3, Formula::Reqn1) == 6);
    CHECK(powersum_special(3, 3, Formula::NegN) == 36);
    for (long k = 0; k <= 10; ++k)
        for (long n = 0; n <= 14; ++n) {
            ExactInt want = powersum_brute(k, n);
            CHECK(powersum_special(k, n, Formula::Reqn) == want);
            CHECK(powersum_special(k, n, Formula::Reqn1) == want);
            CHECK(powersum_special(k, n, Formula::NegN) == want);
        }
    CHECK_THROWS_AS(powersum_special(1, 1, Formula::F1), std::domain_error);
}

TEST_CASE("con1 generalizes reqn and reqn1") {
    CHECK(powersum_con1(2, 2, 0) == 5);
    CHECK(powersum_con1(2, 3, 2) == 14);
    CHECK(powersum_con1(0, 4, 3) == 4);
    for (long k = 0; k <= 8; ++k)
        for (long n = 0; n <= 10; ++n) {
            CHECK(powersum_con1(k, n, 0) == powersum_special(k, n, Formula::Reqn));
            CHECK(powersum_con1(k, n, 1) == powersum_special(k, n, Formula::Reqn1));
            for (long m = 0; m <= 6; ++m) CHECK(powersum_con1(k, n, m) == powersum_brute(k, n));
        }
}

TEST_CASE("con2 requires m <= n and collapses to f1 at m = n") {
    CHECK(powersum_con2(2, 3, 3) == 14);
    CHECK(powersum_con2(3, 4, 1) == 100);
    CHECK(powersum_con2(2, 2, 2) == 5);
    CHECK_THROWS_AS(powersum_con2(2, 3, 4), std::domain_error);
    for (long k = 0; k <= 8; ++k)
        for (long n = 0; n <= 10; ++n)
            for (long m = 0; m <= n; ++m) CHECK(powersum_con2(k, n, m) == powersum_brute(k, n));
}

TEST_CASE("con3 and its unit identity") {
    CHECK(powersum_con3(2, 3) == 14);
    CHECK(powersum_con3(0, 6) == 6);
    CHECK(powersum_con3(4, 1) == 1);
    for (long k = 0; k <= 10; ++k)
        for (long n = 0; n <= 12; ++n) CHECK(powersum_con3(k, n) == powersum_brute(k, n));
    CHECK(con3_unit_identity(0) == 1);
    CHECK(con3_unit_identity(2) == 1);
    CHECK(con3_unit_identity(7) == 1);
    for (long k = 0; k <= 25; ++k) CHECK(con3_unit_identity(k) == 1);
}

TEST_CASE("harmonic-number form") {
    CHECK(powersum_harmonic(1, 2) == 2);
    CHECK(powersum_harmonic(3, 3) == 14);
    for (long k = 1; k <= 10; ++k) CHECK(powersum_harmonic(k, 0) == 0);
    for (long k = 1; k <= 11; ++k)
        for (long n = 0; n <= 14; ++n) CHECK(powersum_harmonic(k, n) == powersum_brute(k - 1, n));
    CHECK_THROWS_AS(powersum_harmonic(0, 3), std::domain_error);
}

TEST_CASE("shifted starting point S_k(r-1)") {
    CHECK(powersum_r_minus1(2, 4) == 14);
    CHECK(powersum_r_minus1(3, 0) == 0);
    CHECK(powersum_r_minus1(0, 0) == -1);
    for (long k = 0; k <= 12; ++k)
        for (long r = 1; r <= 10; ++r) CHECK(powersum_r_minus1(k, r) == powersum_brute(k, r - 1));
}

TEST_CASE("dual-number identity for (-1)^k S_k(r)") {
    // (-1)^k S_k(r) = -delta_{k,0} + sum_j j! C(r+1, j+1) {k j}_{-r}
    for (long k = 0; k <= 12; ++k)
        for (long r = 0; r <= 10; ++r) {
            ExactInt lhs = powersum_brute(k, r);
            if (k % 2 == 1) lhs = -lhs;
            ExactInt rhs = k == 0 ? -1 : 0;
            for (long j = 0; j <= k; ++j)
                rhs += factorial(j) * binomial(r + 1, j + 1) * dual_r_stirling(k, j, r);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("binomial-basis expansion") {
    BinomialExpansion g2 = expand_binomial_basis(2, 1);
    CHECK(g2.constant == 0);
    CHECK(g2.shift() == 0);
    CHECK(g2.coeffs == std::vector<ExactInt>{1, 3, 2});
    CHECK(expand_binomial_basis(3, 1).coeffs == std::vector<ExactInt>{1, 7, 12, 6});
    CHECK(expand_binomial_basis(4, 1).coeffs == std::vector<ExactInt>{1, 15, 50, 60, 24});
    CHECK(expand_binomial_basis(5, 1).coeffs == std::vector<ExactInt>{1, 31, 180, 390, 360, 120});

    BinomialExpansion e10 = expand_binomial_basis(1, 0);
    CHECK(e10.constant == 0);
    CHECK(e10.shift() == 1);
    CHECK(e10.coeffs == std::vector<ExactInt>{0, 1});

    // j!-weighted coefficients: {2 j}_2 = 4, 5, 1 scaled by j! gives 4, 5, 2
    BinomialExpansion e22 = expand_binomial_basis(2, 2);
    CHECK(e22.constant == 1);
    CHECK(e22.shift() == -1);
    CHECK(e22.coeffs == std::vector<ExactInt>{4, 5, 2});
}

TEST_CASE("binomial-basis expansion reproduces the power sum") {
    for (long k = 0; k <= 8; ++k)
        for (long r = 0; r <= 5; ++r) {
            BinomialExpansion e = expand_binomial_basis(k, r);
            for (long n = 0; n <= 12; ++n) {
                ExactInt value = e.constant;
                for (long j = 0; j <= k; ++j)
                    value += e.coeffs[static_cast<std::size_t>(j)] * binomial(n + e.shift(), j + 1);
                CHECK(value == powersum_brute(k, n));
            }
        }
}

TEST_CASE("formula names") {
    for (Formula f : {Formula::Brute, Formula::F1, Formula::F2, Formula::Th1, Formula::Th2,
                      Formula::Reqn, Formula::Reqn1, Formula::NegN, Formula::Con1, Formula::Con2,
                      Formula::Con3, Formula::Harmonic})
        CHECK(parse_formula(formula_name(f)) == f);
    CHECK_THROWS_AS(parse_formula("f3"), std::domain_error);
    CHECK(formula_takes_r(Formula::Th1));
    CHECK(formula_takes_r(Formula::Th2));
    CHECK(formula_takes_m(Formula::Con1));
    CHECK(formula_takes_m(Formula::Con2));
    CHECK_FALSE(formula_takes_r(Formula::Con1));
    CHECK_FALSE(formula_takes_m(Formula::Th1));
}

TEST_CASE("dispatcher covers every formula") {
    for (long k = 0; k <= 8; ++k)
        for (long n = 0; n <= 10; ++n)
            for (const FormulaId& id : all_formula_ids(3, 2, n))
                CHECK(powersum(id, k, n) == powersum_brute(k, n));
    // S_k(1) = 1 for every formula
    for (long k = 1; k <= 12; ++k)
        for (const FormulaId& id : all_formula_ids(2, 1, 1)) CHECK(powersum(id, k, 1) == 1);
}

TEST_CASE("randomized wide-range agreement") {
    // sparse samples well outside the dense grids
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> K(0, 20), N(0, 120), R(0, 25), M(0, 25);
    for (int iter = 0; iter < 25; ++iter) {
        long k = K(rng), n = N(rng), r = R(rng), m = M(rng);
        ExactInt want = powersum_brute(k, n);
        CHECK(powersum_f1(k, n) == want);
        CHECK(powersum_f2(k, n) == want);
        CHECK(powersum_th1(k, n, r) == want);
        CHECK(powersum_th2(k, n, r) == want);
        CHECK(powersum_special(k, n, Formula::Reqn) == want);
        CHECK(powersum_special(k, n, Formula::Reqn1) == want);
        CHECK(powersum_special(k, n, Formula::NegN) == want);
        CHECK(powersum_con1(k, n, m) == want);
        CHECK(powersum_con2(k, n, std::min(m, n)) == want);
        CHECK(powersum_con3(k, n) == want);
        CHECK(powersum_harmonic(k + 1, n) == want);
    }
}

TEST_CASE("large inputs stay exact") {
    // cross-formula agreement at sizes where brute force is the slow path
    const long k = 64, n = 1000000;
    ExactInt a = powersum_f1(k, n);
    CHECK(a == powersum_f2(k, n));
    CHECK(a == powersum_th1(k, n, 3));
    CHECK(a == powersum_th2(k, n, 2));
    // and against the oracle at a size brute force handles quickly
    CHECK(powersum_f1(64, 2000) == powersum_brute(64, 2000));
    CHECK(to_string(powersum_f1(0, 1000000)) == "1000000");
}
