#ifndef STIRSUM_BERNOULLI_HPP
#define STIRSUM_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "stirsum/exact.hpp"
#include "stirsum/polynomial.hpp"

namespace stirsum {

// Convention: B_k = B_k(0), so B_1 = -1/2. The harmonic-number formula below
// forces this choice; the +1/2 convention would fail it at k = 1.

/// Cache of B_0..B_max grown on demand by the defining recurrence
/// sum_{i=0..k} C(k+1, i) B_i = 0. Growth is mutex-guarded; values are
/// returned by copy, so readers never see a reallocation.
class BernoulliCache {
public:
    ExactRat number(long k);

    static BernoulliCache& global();

private:
    std::mutex mu_;
    std::vector<ExactRat> numbers_;
};

/// B_k from the shared cache (recurrence path).
ExactRat bernoulli_number(long k);

/// B_k(x) = sum_i C(k,i) B_i x^(k-i).
Polynomial bernoulli_poly(long k);

/// Power-sum polynomial S_k(x) = [B_{k+1}(x+1) - B_{k+1}(1)] / (k+1);
/// degree k+1, S_k(0) = 0, and S_k(n) = 1^k + ... + n^k at positive integers.
Polynomial powersum_poly(long k);

/// B_{k+1}(r) for integer r >= 0 through the r-shifted Stirling sum:
/// B_{k+1}(r) = B_{k+1}(1) + (k+1) sum_j (-1)^j j! C(r+j-1, j+1) {k j}_r.
ExactRat bernoulli_at_nonneg(long kp1, long r);

/// B_{k+1}(-r) for integer r >= 0 through the dual Stirling sum:
/// B_{k+1}(-r) = B_{k+1}(1) - (k+1) sum_j j! C(r+1, j+1) {k j}_{-r}.
ExactRat bernoulli_at_negative(long kp1, long r);

/// The same identity extended to arbitrary rational x, with {k j}_x read as
/// the Stirling polynomial value and the binomial taken over rationals.
ExactRat bernoulli_general(long kp1, const ExactRat& x);

/// B_k(x-1) = sum_j (-1)^j j! H_{j+1} {k j}_x.
ExactRat bernoulli_shift_harmonic(long k, const ExactRat& x);

/// B_k = sum_j (-1)^j j! H_{j+1} {k+1 j+1}; the x = 1 case of the above.
ExactRat bernoulli_number_harmonic(long k);

}  // namespace stirsum

#endif
