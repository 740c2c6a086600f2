#include "stirsum/stirling.hpp"

namespace stirsum {

namespace {

void check_indices(const char* who, long k, long j) {
    if (k < 0 || j < 0)
        throw std::domain_error(std::string(who) + ": negative index");
}

// sum_{i=0..j} (-1)^(j-i) C(j,i) (i+shift)^k, then exact division by j!.
ExactInt alternating_sum(long k, long j, long shift) {
    ExactInt sum = 0;
    for (long i = 0; i <= j; ++i) {
        ExactInt term = binomial(j, i) * pow_int(ExactInt(i + shift), static_cast<unsigned long>(k));
        if ((j - i) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return divide_exact(sum, factorial(j));
}

}  // namespace

ExactInt stirling2(long k, long j) {
    check_indices("stirling2", k, j);
    if (j > k) return 0;
    // row-by-row recurrence; row[m] holds {i m} while building row i
    std::vector<ExactInt> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (long i = 1; i <= k; ++i) {
        for (long m = std::min(i, j); m >= 1; --m)
            row[m] = m * row[m] + row[m - 1];
        row[0] = 0;  // {i 0} = 0 once i >= 1
    }
    return row[j];
}

ExactInt r_stirling(long k, long j, long r) {
    check_indices("r_stirling", k, j);
    if (r < 0) throw std::domain_error("r_stirling: negative shift");
    if (j > k) return 0;
    return alternating_sum(k, j, r);
}

ExactInt dual_r_stirling(long k, long j, long r) {
    check_indices("dual_r_stirling", k, j);
    if (r < 0) throw std::domain_error("dual_r_stirling: negative shift");
    if (j > k) return 0;
    return alternating_sum(k, j, -r);
}

Polynomial stirling_poly(long k, long j) {
    check_indices("stirling_poly", k, j);
    if (j > k) throw std::domain_error("stirling_poly: j exceeds k");
    std::vector<ExactRat> coeffs(static_cast<std::size_t>(k - j) + 1);
    for (long i = 0; i <= k - j; ++i)
        coeffs[i] = ExactRat(binomial(k, i) * stirling2(k - i, j));
    return Polynomial(std::move(coeffs));
}

ExactRat eval_stirling_poly(long k, long j, const ExactRat& x) {
    check_indices("eval_stirling_poly", k, j);
    if (j > k) throw std::domain_error("eval_stirling_poly: j exceeds k");
    ExactRat sum;
    for (long i = 0; i <= j; ++i) {
        ExactRat term = ExactRat(binomial(j, i)) * pow_rat(x + ExactRat(i), static_cast<unsigned long>(k));
        if ((j - i) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum / ExactRat(factorial(j));
}

StirlingTable::StirlingTable(StirlingKind kind, long max_k) : kind_(kind), max_k_(max_k) {
    if (max_k < 0) throw std::domain_error("StirlingTable: negative max_k");
    if (kind.r < 0) throw std::domain_error("StirlingTable: negative shift");
    long shift = 0;
    if (kind.variant == StirlingVariant::RShifted) shift = kind.r;
    if (kind.variant == StirlingVariant::Dual) shift = -kind.r;
    rows_.resize(static_cast<std::size_t>(max_k) + 1);
    rows_[0] = {ExactInt(1)};
    for (long k = 1; k <= max_k; ++k) {
        auto& row = rows_[static_cast<std::size_t>(k)];
        const auto& prev = rows_[static_cast<std::size_t>(k - 1)];
        row.resize(static_cast<std::size_t>(k) + 1);
        for (long j = 0; j <= k; ++j) {
            ExactInt v = 0;
            if (j < k) v += (j + shift) * prev[static_cast<std::size_t>(j)];
            if (j > 0) v += prev[static_cast<std::size_t>(j - 1)];
            row[static_cast<std::size_t>(j)] = v;
        }
    }
}

const ExactInt& StirlingTable::at(long k, long j) const {
    if (k < 0 || j < 0 || k > max_k_ || j > k)
        throw std::domain_error("StirlingTable::at: index out of range");
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

}  // namespace stirsum
