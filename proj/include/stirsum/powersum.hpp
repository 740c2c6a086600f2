#ifndef STIRSUM_POWERSUM_HPP
#define STIRSUM_POWERSUM_HPP

#include <string>
#include <vector>

#include "stirsum/exact.hpp"

namespace stirsum {

// Closed forms for the power sum S_k(n) = 1^k + 2^k + ... + n^k. Each
// function is an independent straight-line translation of one displayed
// identity -- none of them calls another -- so agreement between any two of
// them over a grid is evidence for the identities, not for shared code.

enum class Formula { Brute, F1, F2, Th1, Th2, Reqn, Reqn1, NegN, Con1, Con2, Con3, Harmonic };

/// Formula selector plus its parameter: r for Th1/Th2, m for Con1/Con2,
/// unused otherwise.
struct FormulaId {
    Formula kind = Formula::Brute;
    long param = 0;
};

bool formula_takes_r(Formula f);
bool formula_takes_m(Formula f);
std::string formula_name(Formula f);
/// Parses "brute", "f1", ..., "harmonic"; throws std::domain_error otherwise.
Formula parse_formula(const std::string& name);

/// The oracle: literal summation.
ExactInt powersum_brute(long k, long n);

/// S_k(n) = -delta_{k,0} + sum_j j! C(n+1, j+1) {k j}.
ExactInt powersum_f1(long k, long n);

/// S_k(n) = sum_j j! C(n, j+1) {k+1 j+1}.
ExactInt powersum_f2(long k, long n);

/// S_k(n) = sum_j j! [C(n+1-r, j+1) + (-1)^j C(r+j-1, j+1)] {k j}_r,
/// valid for every fixed r >= 0 (the upper argument n+1-r may go negative).
ExactInt powersum_th1(long k, long n, long r);

/// S_k(n) = sum_j j! [C(n+1+r, j+1) - C(r+1, j+1)] {k j}_{-r}.
ExactInt powersum_th2(long k, long n, long r);

/// The three fixed specializations:
///   Reqn  (r = n):    S_k(n) = n^(k+1) + sum_{j>=1} (-1)^j j! C(n+j-1, j+1) {k j}_n
///   Reqn1 (r = n+1):  S_k(n) = sum_j (-1)^j j! C(n+j, j+1) {k j}_{n+1}
///   NegN:             S_k(n) = (-1)^k [-delta_{k,0} + sum_j j! C(n+1, j+1) {k j}_{-n}]
/// `which` must be one of those three.
ExactInt powersum_special(long k, long n, Formula which);

/// S_k(n) = sum_j (-1)^j j! [C(n+m+j-1, j+1) - C(m+j-1, j+1)] {k j}_{n+m}.
ExactInt powersum_con1(long k, long n, long m);

/// S_k(n) = sum_j j! [C(m+1, j+1) + (-1)^j C(n+j-m-1, j+1)] {k j}_{n-m};
/// requires m <= n so the shift n-m stays non-negative.
ExactInt powersum_con2(long k, long n, long m);

/// S_k(n) = sum_j (-1)^(k-j) j! [C(n+k+1, j+1) - C(k+1, j+1)] {k j}_{k-j}.
ExactInt powersum_con3(long k, long n);

/// sum_j (-1)^(k-j) j! C(k+1, j) {k j}_{k-j}; equals 1 for every k.
ExactInt con3_unit_identity(long k);

/// S_{k-1}(n) = (1/k) sum_{j=0..k} (-1)^j j! H_{j+1} ({k j}_{n+2} - {k j}_2)
/// for k >= 1. The rational sum must come out an exact integer; if not,
/// std::logic_error is thrown.
ExactInt powersum_harmonic(long k, long n);

/// S_k(r-1) = sum_j (-1)^j j! C(r+j-1, j+1) {k j}_r. For r = 0 this is
/// S_k(-1): 0 when k >= 1 and -1 when k = 0.
ExactInt powersum_r_minus1(long k, long r);

/// Expansion of S_k(n) in the shifted binomial basis:
/// S_k(n) = constant + sum_j coeffs[j] * C(n + shift, j+1) with
/// constant = S_k(r-1), coeffs[j] = j! {k j}_r and shift = 1 - r.
/// For r = 1 the coefficient rows are Ginsburg's.
struct BinomialExpansion {
    long k = 0;
    long r = 0;
    ExactInt constant;
    std::vector<ExactInt> coeffs;  // j = 0..k
    long shift() const { return 1 - r; }
};

BinomialExpansion expand_binomial_basis(long k, long r);

/// Dispatch on FormulaId; every formula returns S_k(n).
ExactInt powersum(const FormulaId& id, long k, long n);

}  // namespace stirsum

#endif
