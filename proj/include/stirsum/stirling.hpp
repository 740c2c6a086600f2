#ifndef STIRSUM_STIRLING_HPP
#define STIRSUM_STIRLING_HPP

#include <vector>

#include "stirsum/exact.hpp"
#include "stirsum/polynomial.hpp"

namespace stirsum {

// Notation used throughout: {k j} is the ordinary Stirling number of the
// second kind, {k j}_r its r-shifted variant and {k j}_{-r} the dual
// (non-central) variant. All three share the triangular index range
// 0 <= j <= k; number-valued functions return 0 for j > k.

/// {k j} by the recurrence {k j} = j*{k-1 j} + {k-1 j-1}.
ExactInt stirling2(long k, long j);

/// {k j}_r = (1/j!) sum_{i=0..j} (-1)^(j-i) C(j,i) (i+r)^k. The division by
/// j! is asserted exact; a nonzero remainder aborts with std::logic_error.
ExactInt r_stirling(long k, long j, long r);

/// {k j}_{-r} = (1/j!) sum_{i=0..j} (-1)^(j-i) C(j,i) (i-r)^k (signed).
ExactInt dual_r_stirling(long k, long j, long r);

/// Weighted Stirling polynomial R_{k,j}(x) = sum_i C(k,i) {k-i j} x^i,
/// of degree k-j with leading coefficient C(k,j) and constant term {k j}.
/// j > k is a domain error.
Polynomial stirling_poly(long k, long j);

/// R_{k,j}(x) evaluated exactly at any rational x, via the alternating form
/// (1/j!) sum_i (-1)^(j-i) C(j,i) (i+x)^k. Agrees with r_stirling and
/// dual_r_stirling at integer x and with stirling_poly(k,j).eval(x)
/// everywhere; the two routes share no code.
ExactRat eval_stirling_poly(long k, long j, const ExactRat& x);

enum class StirlingVariant { Ordinary, RShifted, Dual };

struct StirlingKind {
    StirlingVariant variant = StirlingVariant::Ordinary;
    long r = 0;  // shift, >= 0; Dual holds the magnitude of the negative shift
};

/// Triangle of {k j}_(+/-r) for 0 <= j <= k <= max_k, built by the shifted
/// recurrence {k j}_s = (j+s) {k-1 j}_s + {k-1 j-1}_s. Immutable once built.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, long max_k);

    const StirlingKind& kind() const { return kind_; }
    long max_k() const { return max_k_; }
    const ExactInt& at(long k, long j) const;

private:
    StirlingKind kind_;
    long max_k_;
    std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace stirsum

#endif
