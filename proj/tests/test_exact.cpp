#include <doctest.h>

#include <random>

#include "stirsum/exact.hpp"

using namespace stirsum;

namespace {

// oracle: k! by literal repeated multiplication
ExactInt factorial_oracle(long k) {
    ExactInt out = 1;
    for (long i = 2; i <= k; ++i) out *= i;
    return out;
}

// oracle: Pascal triangle for non-negative upper index
ExactInt pascal_oracle(long n, long k) {
    std::vector<std::vector<ExactInt>> rows(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i) + 1);
        row.front() = 1;
        row.back() = 1;
        for (long j = 1; j < i; ++j)
            row[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                                               rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    if (k > n) return 0;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(6) == 720);
    for (long k = 0; k <= 30; ++k) CHECK(factorial(k) == factorial_oracle(k));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial agrees with the Pascal oracle") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 2) == pascal_oracle(5, 2));
    CHECK(binomial(3, 5) == 0);
    for (long n = 0; n <= 15; ++n)
        for (long k = 0; k <= 15; ++k) CHECK(binomial(n, k) == pascal_oracle(n, k));
    CHECK_THROWS_AS(binomial(4, -1), std::domain_error);
}

TEST_CASE("binomial with negative upper argument") {
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(-1, 1) == -1);
    // C(-x, k) = (-1)^k C(x+k-1, k)
    for (long x = 1; x <= 20; ++x)
        for (long k = 0; k <= 20; ++k) {
            ExactInt rhs = binomial(x + k - 1, k);
            if (k % 2 == 1) rhs = -rhs;
            CHECK(binomial(-x, k) == rhs);
        }
}

TEST_CASE("Pascal recurrence over negative and positive upper index") {
    for (long n = -20; n <= 20; ++n)
        for (long k = 1; k <= 20; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == ExactRat(0));
    CHECK(harmonic(2) == ExactRat(3, 2));
    CHECK(harmonic(3) == ExactRat(11, 6));
    for (long j = 1; j <= 50; ++j) CHECK(harmonic(j) - harmonic(j - 1) == ExactRat(1, j));
    CHECK_THROWS_AS(harmonic(-2), std::domain_error);
}

TEST_CASE("ExactRat normalizes eagerly") {
    ExactRat q(6, -4);
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q == ExactRat(-3, 2));
    CHECK(ExactRat(0, 7) == ExactRat(0));
    CHECK(ExactRat(0, 7).denominator() == 1);
    CHECK_THROWS_AS(ExactRat(1, 0), std::domain_error);
}

TEST_CASE("ExactRat arithmetic stays canonical") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 40);
    for (int iter = 0; iter < 500; ++iter) {
        ExactRat a(num(rng), den(rng));
        ExactRat b(num(rng), den(rng));
        for (const ExactRat& v : {a + b, a - b, a * b}) {
            ExactInt g;
            mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(v.denominator() > 0);
        }
        if (!b.is_zero()) {
            ExactRat v = a / b;
            CHECK(v * b == a);
        }
    }
    CHECK_THROWS_AS(ExactRat(1, 2) / ExactRat(0), std::domain_error);
}

TEST_CASE("ExactRat string round trip") {
    CHECK(ExactRat(-3, 2).str() == "-3/2");
    CHECK(ExactRat(7).str() == "7");
    CHECK(ExactRat::parse("-3/2") == ExactRat(3, -2));
    CHECK(ExactRat::parse("42") == ExactRat(42));
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int iter = 0; iter < 200; ++iter) {
        ExactRat v(num(rng), den(rng));
        CHECK(ExactRat::parse(v.str()) == v);
    }
    CHECK_THROWS_AS(ExactRat::parse("x/2"), std::domain_error);
}

TEST_CASE("integer helpers") {
    CHECK(divide_exact(12, 4) == 3);
    CHECK_THROWS_AS(divide_exact(11, 4), std::logic_error);
    CHECK_THROWS_AS(divide_exact(1, 0), std::domain_error);
    CHECK(pow_int(ExactInt(-2), 5) == -32);
    CHECK(pow_int(ExactInt(0), 0) == 1);
    CHECK(pow_rat(ExactRat(-2, 3), 3) == ExactRat(-8, 27));
    CHECK(ExactRat(14, 2).to_integer() == 7);
    CHECK_THROWS_AS(ExactRat(1, 2).to_integer(), std::logic_error);
    CHECK(to_string(ExactInt(-123)) == "-123");
    CHECK(parse_int("-123") == -123);
    CHECK_THROWS_AS(parse_int("12a"), std::domain_error);
}

TEST_CASE("binomial_rat matches integer binomial and handles rationals") {
    for (long n = -6; n <= 6; ++n)
        for (long k = 0; k <= 6; ++k) CHECK(binomial_rat(ExactRat(n), k) == ExactRat(binomial(n, k)));
    // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
    CHECK(binomial_rat(ExactRat(1, 2), 2) == ExactRat(-1, 8));
}
