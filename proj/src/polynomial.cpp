#include "stirsum/polynomial.hpp"

#include <algorithm>

namespace stirsum {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t deg, const ExactRat& coeff) {
    std::vector<ExactRat> c(deg + 1);
    c[deg] = coeff;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<ExactRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const ExactRat& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial out = *this;
    for (auto& x : out.c_) x *= c;
    return out;
}

Polynomial Polynomial::shifted(const ExactRat& c) const {
    // Horner: p(x+c) = (...(c_d * (x+c) + c_{d-1}) * (x+c) + ...) + c_0
    Polynomial out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        std::vector<ExactRat> next(out.c_.size() + 1);
        for (std::size_t k = 0; k < out.c_.size(); ++k) {
            next[k + 1] += out.c_[k];
            next[k] += out.c_[k] * c;
        }
        next[0] += c_[i];
        out.c_ = std::move(next);
    }
    out.trim();
    return out;
}

ExactRat Polynomial::eval(const ExactRat& x) const {
    ExactRat acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const ExactRat& c = c_[i];
        if (c.is_zero()) continue;
        ExactRat a = c;
        if (out.empty()) {
            if (a < ExactRat(0)) { out += "-"; a = -a; }
        } else {
            out += a < ExactRat(0) ? " - " : " + ";
            if (a < ExactRat(0)) a = -a;
        }
        std::string cs = a.str();
        if (i == 0) {
            out += cs;
        } else {
            if (a != ExactRat(1)) out += (a.is_integer() ? cs : "(" + cs + ")") + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial delta(const Polynomial& p) { return p.shifted(ExactRat(1)) - p; }

Polynomial iterated_delta(const Polynomial& p, long j) {
    if (j < 0) throw std::domain_error("iterated_delta: negative order");
    Polynomial out = p;
    for (long i = 0; i < j && !out.is_zero(); ++i) out = delta(out);
    return out;
}

std::vector<ExactRat> newton_gregory(const Polynomial& p, const ExactRat& a) {
    std::vector<ExactRat> out;
    Polynomial q = p;
    long d = std::max(p.degree(), 0L);
    for (long j = 0; j <= d; ++j) {
        out.push_back(q.eval(a));
        q = delta(q);
    }
    return out;
}

Polynomial binomial_basis_poly(long j, const ExactRat& a) {
    if (j < 0) throw std::domain_error("binomial_basis_poly: negative order");
    Polynomial out = Polynomial::constant(ExactRat(1));
    for (long i = 0; i < j; ++i)
        out = out * Polynomial({-(a + ExactRat(i)), ExactRat(1)});  // (x - a - i)
    return out.scaled(ExactRat(ExactInt(1), factorial(j)));
}

Polynomial from_newton_gregory(const std::vector<ExactRat>& coeffs, const ExactRat& a) {
    Polynomial out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        out += binomial_basis_poly(static_cast<long>(j), a).scaled(coeffs[j]);
    return out;
}

}  // namespace stirsum
