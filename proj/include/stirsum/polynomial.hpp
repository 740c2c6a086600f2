#ifndef STIRSUM_POLYNOMIAL_HPP
#define STIRSUM_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stirsum/exact.hpp"

namespace stirsum {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial is the empty coefficient vector;
/// there is never a trailing zero coefficient, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const ExactRat& c) { return Polynomial({c}); }
    /// coeff * x^deg
    static Polynomial monomial(std::size_t deg, const ExactRat& coeff = ExactRat(1));

    /// Degree, with degree(0) = -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the stored degree).
    ExactRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactRat(); }
    const std::vector<ExactRat>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const ExactRat& c) const;
    /// p(x + c) by Horner in (x + c).
    Polynomial shifted(const ExactRat& c) const;
    ExactRat eval(const ExactRat& x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human-readable form, descending powers, e.g. "x^2 - x + 1/6".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<ExactRat> c_;
};

/// Forward difference (delta p)(x) = p(x+1) - p(x). Drops the degree of a
/// nonconstant polynomial by exactly one.
Polynomial delta(const Polynomial& p);

/// j-fold forward difference; iterated_delta(p, 0) = p.
Polynomial iterated_delta(const Polynomial& p, long j);

/// Newton-Gregory coefficients [delta^0 p(a), ..., delta^d p(a)] with
/// d = degree(p). A constant (or zero) polynomial yields one entry. The
/// expansion sum_j out[j] * C(x-a, j) reproduces p exactly.
std::vector<ExactRat> newton_gregory(const Polynomial& p, const ExactRat& a);

/// C(x-a, j) = (x-a)(x-a-1)...(x-a-j+1)/j! as a polynomial of degree j.
Polynomial binomial_basis_poly(long j, const ExactRat& a);

/// sum_j coeffs[j] * C(x-a, j): inverse of newton_gregory.
Polynomial from_newton_gregory(const std::vector<ExactRat>& coeffs, const ExactRat& a);

}  // namespace stirsum

#endif
