#ifndef STIRSUM_EXACT_HPP
#define STIRSUM_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stirsum {

// Arbitrary-precision signed integer. mpz_class already has the canonical
// sign-magnitude representation (single zero) and the full operator set.
using ExactInt = mpz_class;

// Exact quotient; the remainder must be zero. Every integer division in the
// library goes through here so an inexact division fails loudly instead of
// truncating.
ExactInt divide_exact(const ExactInt& a, const ExactInt& b);

ExactInt pow_int(const ExactInt& base, unsigned long e);

std::string to_string(const ExactInt& v);
ExactInt parse_int(const std::string& s);

/// Normalized arbitrary-precision rational: denominator > 0 and
/// gcd(|num|, den) = 1 at all times, so operator== is semantic equality.
class ExactRat {
public:
    ExactRat() : v_(0) {}
    ExactRat(long n) : v_(n) {}
    ExactRat(const ExactInt& n) : v_(n) {}
    ExactRat(const ExactInt& num, const ExactInt& den);
    ExactRat(long num, long den);

    ExactInt numerator() const { return v_.get_num(); }
    ExactInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Throws std::logic_error unless the value is an integer.
    ExactInt to_integer() const;

    ExactRat operator-() const;
    ExactRat& operator+=(const ExactRat& o) { v_ += o.v_; return *this; }
    ExactRat& operator-=(const ExactRat& o) { v_ -= o.v_; return *this; }
    ExactRat& operator*=(const ExactRat& o) { v_ *= o.v_; return *this; }
    ExactRat& operator/=(const ExactRat& o);

    friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
    friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
    friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
    friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }

    friend bool operator==(const ExactRat& a, const ExactRat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const ExactRat& a, const ExactRat& b) { return !(a == b); }
    friend bool operator<(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) >= 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    static ExactRat parse(const std::string& s);

private:
    mpq_class v_;  // invariant: canonical
};

ExactRat pow_rat(const ExactRat& base, unsigned long e);

// k! for k >= 0; negative k is a domain error.
ExactInt factorial(const ExactInt& k);
inline ExactInt factorial(long k) { return factorial(ExactInt(k)); }

// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n
// (negative upper argument allowed) and k >= 0.
ExactInt binomial(const ExactInt& n, long k);
inline ExactInt binomial(long n, long k) { return binomial(ExactInt(n), k); }

// Binomial coefficient with rational upper argument, as an exact rational:
// the falling-factorial polynomial evaluated at y, never integer division.
ExactRat binomial_rat(const ExactRat& y, long k);

// H_j = 1 + 1/2 + ... + 1/j, with H_0 = 0.
ExactRat harmonic(long j);

}  // namespace stirsum

#endif
