#include "stirsum/bernoulli.hpp"

#include "stirsum/stirling.hpp"

namespace stirsum {

ExactRat BernoulliCache::number(long k) {
    if (k < 0) throw std::domain_error("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(mu_);
    if (numbers_.empty()) numbers_.push_back(ExactRat(1));
    while (static_cast<long>(numbers_.size()) <= k) {
        long m = static_cast<long>(numbers_.size());
        ExactRat sum;
        for (long i = 0; i < m; ++i)
            sum += ExactRat(binomial(m + 1, i)) * numbers_[static_cast<std::size_t>(i)];
        numbers_.push_back(-sum / ExactRat(m + 1));
    }
    return numbers_[static_cast<std::size_t>(k)];
}

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

ExactRat bernoulli_number(long k) { return BernoulliCache::global().number(k); }

Polynomial bernoulli_poly(long k) {
    if (k < 0) throw std::domain_error("bernoulli_poly: negative index");
    std::vector<ExactRat> coeffs(static_cast<std::size_t>(k) + 1);
    for (long i = 0; i <= k; ++i)
        coeffs[static_cast<std::size_t>(k - i)] = ExactRat(binomial(k, i)) * bernoulli_number(i);
    return Polynomial(std::move(coeffs));
}

Polynomial powersum_poly(long k) {
    if (k < 0) throw std::domain_error("powersum_poly: negative index");
    Polynomial shifted = bernoulli_poly(k + 1).shifted(ExactRat(1));  // B_{k+1}(x+1)
    Polynomial diff = shifted - Polynomial::constant(shifted.coeff(0));
    return diff.scaled(ExactRat(1, k + 1));
}

namespace {

ExactRat bernoulli_at_one(long kp1) { return bernoulli_poly(kp1).eval(ExactRat(1)); }

void check_kp1(const char* who, long kp1) {
    if (kp1 < 1) throw std::domain_error(std::string(who) + ": index must be >= 1");
}

}  // namespace

ExactRat bernoulli_at_nonneg(long kp1, long r) {
    check_kp1("bernoulli_at_nonneg", kp1);
    if (r < 0) throw std::domain_error("bernoulli_at_nonneg: negative argument");
    long k = kp1 - 1;
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt term = factorial(j) * binomial(r + j - 1, j + 1) * r_stirling(k, j, r);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return bernoulli_at_one(kp1) + ExactRat(kp1) * ExactRat(sum);
}

ExactRat bernoulli_at_negative(long kp1, long r) {
    check_kp1("bernoulli_at_negative", kp1);
    if (r < 0) throw std::domain_error("bernoulli_at_negative: negative argument");
    long k = kp1 - 1;
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j)
        sum += factorial(j) * binomial(r + 1, j + 1) * dual_r_stirling(k, j, r);
    return bernoulli_at_one(kp1) - ExactRat(kp1) * ExactRat(sum);
}

ExactRat bernoulli_general(long kp1, const ExactRat& x) {
    check_kp1("bernoulli_general", kp1);
    long k = kp1 - 1;
    ExactRat sum;
    for (long j = 0; j <= k; ++j) {
        ExactRat term = ExactRat(factorial(j)) * binomial_rat(x + ExactRat(j - 1), j + 1) *
                        eval_stirling_poly(k, j, x);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return bernoulli_at_one(kp1) + ExactRat(kp1) * sum;
}

ExactRat bernoulli_shift_harmonic(long k, const ExactRat& x) {
    if (k < 0) throw std::domain_error("bernoulli_shift_harmonic: negative index");
    ExactRat sum;
    for (long j = 0; j <= k; ++j) {
        ExactRat term = ExactRat(factorial(j)) * harmonic(j + 1) * eval_stirling_poly(k, j, x);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

ExactRat bernoulli_number_harmonic(long k) {
    if (k < 0) throw std::domain_error("bernoulli_number_harmonic: negative index");
    ExactRat sum;
    for (long j = 0; j <= k; ++j) {
        ExactRat term = ExactRat(factorial(j)) * harmonic(j + 1) * ExactRat(stirling2(k + 1, j + 1));
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace stirsum
