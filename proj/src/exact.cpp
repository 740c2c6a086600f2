#include "stirsum/exact.hpp"

namespace stirsum {

ExactInt divide_exact(const ExactInt& a, const ExactInt& b) {
    if (b == 0) throw std::domain_error("divide_exact: division by zero");
    ExactInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error("divide_exact: inexact division " + to_string(a) + " / " + to_string(b));
    return q;
}

ExactInt pow_int(const ExactInt& base, unsigned long e) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

ExactInt parse_int(const std::string& s) {
    ExactInt v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::domain_error("parse_int: not a decimal integer: '" + s + "'");
    return v;
}

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("ExactRat: zero denominator");
    v_.canonicalize();
}

ExactRat::ExactRat(long num, long den) : ExactRat(ExactInt(num), ExactInt(den)) {}

ExactInt ExactRat::to_integer() const {
    if (!is_integer())
        throw std::logic_error("ExactRat: " + str() + " is not an integer");
    return v_.get_num();
}

ExactRat ExactRat::operator-() const {
    ExactRat out;
    out.v_ = -v_;
    return out;
}

ExactRat& ExactRat::operator/=(const ExactRat& o) {
    if (o.is_zero()) throw std::domain_error("ExactRat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string ExactRat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRat ExactRat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return ExactRat(parse_int(s));
    return ExactRat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

ExactRat pow_rat(const ExactRat& base, unsigned long e) {
    // numerator and denominator are coprime, so their powers are too
    return ExactRat(pow_int(base.numerator(), e), pow_int(base.denominator(), e));
}

ExactInt factorial(const ExactInt& k) {
    if (k < 0) throw std::domain_error("factorial: negative argument " + to_string(k));
    if (!k.fits_ulong_p())
        throw std::domain_error("factorial: argument too large: " + to_string(k));
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), k.get_ui());
    return out;
}

ExactInt binomial(const ExactInt& n, long k) {
    if (k < 0) throw std::domain_error("binomial: negative lower index");
    ExactInt falling = 1;
    for (long i = 0; i < k; ++i) falling *= n - i;
    return divide_exact(falling, factorial(k));
}

ExactRat binomial_rat(const ExactRat& y, long k) {
    if (k < 0) throw std::domain_error("binomial_rat: negative lower index");
    ExactRat falling = 1;
    for (long i = 0; i < k; ++i) falling *= y - ExactRat(i);
    return falling / ExactRat(factorial(k));
}

ExactRat harmonic(long j) {
    if (j < 0) throw std::domain_error("harmonic: negative argument");
    ExactRat h;
    for (long i = 1; i <= j; ++i) h += ExactRat(1, i);
    return h;
}

}  // namespace stirsum
