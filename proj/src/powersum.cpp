#include "stirsum/powersum.hpp"

#include <map>

#include "stirsum/stirling.hpp"

namespace stirsum {

namespace {

void check_kn(const char* who, long k, long n) {
    if (k < 0 || n < 0)
        throw std::domain_error(std::string(who) + ": negative argument");
}

long sign(long parity) { return parity % 2 == 0 ? 1 : -1; }

}  // namespace

bool formula_takes_r(Formula f) { return f == Formula::Th1 || f == Formula::Th2; }
bool formula_takes_m(Formula f) { return f == Formula::Con1 || f == Formula::Con2; }

std::string formula_name(Formula f) {
    switch (f) {
        case Formula::Brute: return "brute";
        case Formula::F1: return "f1";
        case Formula::F2: return "f2";
        case Formula::Th1: return "th1";
        case Formula::Th2: return "th2";
        case Formula::Reqn: return "reqn";
        case Formula::Reqn1: return "reqn1";
        case Formula::NegN: return "negn";
        case Formula::Con1: return "con1";
        case Formula::Con2: return "con2";
        case Formula::Con3: return "con3";
        case Formula::Harmonic: return "harmonic";
    }
    throw std::logic_error("formula_name: bad enum");
}

Formula parse_formula(const std::string& name) {
    static const std::map<std::string, Formula> table = {
        {"brute", Formula::Brute}, {"f1", Formula::F1},       {"f2", Formula::F2},
        {"th1", Formula::Th1},     {"th2", Formula::Th2},     {"reqn", Formula::Reqn},
        {"reqn1", Formula::Reqn1}, {"negn", Formula::NegN},   {"con1", Formula::Con1},
        {"con2", Formula::Con2},   {"con3", Formula::Con3},   {"harmonic", Formula::Harmonic},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::domain_error("unknown formula '" + name + "'");
    return it->second;
}

ExactInt powersum_brute(long k, long n) {
    check_kn("powersum_brute", k, n);
    ExactInt sum = 0;
    for (long i = 1; i <= n; ++i) sum += pow_int(ExactInt(i), static_cast<unsigned long>(k));
    return sum;
}

ExactInt powersum_f1(long k, long n) {
    check_kn("powersum_f1", k, n);
    ExactInt sum = k == 0 ? -1 : 0;
    for (long j = 0; j <= k; ++j)
        sum += factorial(j) * binomial(n + 1, j + 1) * stirling2(k, j);
    return sum;
}

ExactInt powersum_f2(long k, long n) {
    check_kn("powersum_f2", k, n);
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j)
        sum += factorial(j) * binomial(n, j + 1) * stirling2(k + 1, j + 1);
    return sum;
}

ExactInt powersum_th1(long k, long n, long r) {
    check_kn("powersum_th1", k, n);
    if (r < 0) throw std::domain_error("powersum_th1: negative r");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt bracket = binomial(n + 1 - r, j + 1) + sign(j) * binomial(r + j - 1, j + 1);
        sum += factorial(j) * bracket * r_stirling(k, j, r);
    }
    return sum;
}

ExactInt powersum_th2(long k, long n, long r) {
    check_kn("powersum_th2", k, n);
    if (r < 0) throw std::domain_error("powersum_th2: negative r");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt bracket = binomial(n + 1 + r, j + 1) - binomial(r + 1, j + 1);
        sum += factorial(j) * bracket * dual_r_stirling(k, j, r);
    }
    return sum;
}

ExactInt powersum_special(long k, long n, Formula which) {
    check_kn("powersum_special", k, n);
    switch (which) {
        case Formula::Reqn: {
            ExactInt sum = pow_int(ExactInt(n), static_cast<unsigned long>(k) + 1);
            for (long j = 1; j <= k; ++j)
                sum += sign(j) * factorial(j) * binomial(n + j - 1, j + 1) * r_stirling(k, j, n);
            return sum;
        }
        case Formula::Reqn1: {
            ExactInt sum = 0;
            for (long j = 0; j <= k; ++j)
                sum += sign(j) * factorial(j) * binomial(n + j, j + 1) * r_stirling(k, j, n + 1);
            return sum;
        }
        case Formula::NegN: {
            ExactInt sum = k == 0 ? -1 : 0;
            for (long j = 0; j <= k; ++j)
                sum += factorial(j) * binomial(n + 1, j + 1) * dual_r_stirling(k, j, n);
            return sign(k) * sum;
        }
        default:
            throw std::domain_error("powersum_special: formula must be reqn, reqn1 or negn");
    }
}

ExactInt powersum_con1(long k, long n, long m) {
    check_kn("powersum_con1", k, n);
    if (m < 0) throw std::domain_error("powersum_con1: negative m");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt bracket = binomial(n + m + j - 1, j + 1) - binomial(m + j - 1, j + 1);
        sum += sign(j) * factorial(j) * bracket * r_stirling(k, j, n + m);
    }
    return sum;
}

ExactInt powersum_con2(long k, long n, long m) {
    check_kn("powersum_con2", k, n);
    if (m < 0) throw std::domain_error("powersum_con2: negative m");
    if (m > n)
        throw std::domain_error("powersum_con2: m > n leaves the Stirling shift negative");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt bracket = binomial(m + 1, j + 1) + sign(j) * binomial(n + j - m - 1, j + 1);
        sum += factorial(j) * bracket * r_stirling(k, j, n - m);
    }
    return sum;
}

ExactInt powersum_con3(long k, long n) {
    check_kn("powersum_con3", k, n);
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        ExactInt bracket = binomial(n + k + 1, j + 1) - binomial(k + 1, j + 1);
        sum += sign(k - j) * factorial(j) * bracket * r_stirling(k, j, k - j);
    }
    return sum;
}

ExactInt con3_unit_identity(long k) {
    if (k < 0) throw std::domain_error("con3_unit_identity: negative k");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j)
        sum += sign(k - j) * factorial(j) * binomial(k + 1, j) * r_stirling(k, j, k - j);
    return sum;
}

ExactInt powersum_harmonic(long k, long n) {
    if (k < 1) throw std::domain_error("powersum_harmonic: k must be >= 1");
    if (n < 0) throw std::domain_error("powersum_harmonic: negative n");
    ExactRat sum;
    for (long j = 0; j <= k; ++j) {
        ExactRat diff = ExactRat(r_stirling(k, j, n + 2) - r_stirling(k, j, 2));
        ExactRat term = ExactRat(factorial(j)) * harmonic(j + 1) * diff;
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    // S_{k-1}(n) is an integer; anything else is an implementation bug
    return (sum / ExactRat(k)).to_integer();
}

ExactInt powersum_r_minus1(long k, long r) {
    if (k < 0 || r < 0) throw std::domain_error("powersum_r_minus1: negative argument");
    ExactInt sum = 0;
    for (long j = 0; j <= k; ++j)
        sum += sign(j) * factorial(j) * binomial(r + j - 1, j + 1) * r_stirling(k, j, r);
    return sum;
}

BinomialExpansion expand_binomial_basis(long k, long r) {
    if (k < 0 || r < 0) throw std::domain_error("expand_binomial_basis: negative argument");
    BinomialExpansion out;
    out.k = k;
    out.r = r;
    out.constant = powersum_r_minus1(k, r);
    out.coeffs.reserve(static_cast<std::size_t>(k) + 1);
    for (long j = 0; j <= k; ++j)
        out.coeffs.push_back(factorial(j) * r_stirling(k, j, r));
    return out;
}

ExactInt powersum(const FormulaId& id, long k, long n) {
    switch (id.kind) {
        case Formula::Brute: return powersum_brute(k, n);
        case Formula::F1: return powersum_f1(k, n);
        case Formula::F2: return powersum_f2(k, n);
        case Formula::Th1: return powersum_th1(k, n, id.param);
        case Formula::Th2: return powersum_th2(k, n, id.param);
        case Formula::Reqn:
        case Formula::Reqn1:
        case Formula::NegN: return powersum_special(k, n, id.kind);
        case Formula::Con1: return powersum_con1(k, n, id.param);
        case Formula::Con2: return powersum_con2(k, n, id.param);
        case Formula::Con3: return powersum_con3(k, n);
        case Formula::Harmonic: return powersum_harmonic(k + 1, n);
    }
    throw std::logic_error("powersum: bad formula enum");
}

}  // namespace stirsum
