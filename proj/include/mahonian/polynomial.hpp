#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mahonian/arith.hpp"
#include "mahonian/composition.hpp"

namespace mahonian {

// Dense polynomial in q over arbitrary-precision integers, kept in canonical
// trimmed form: coeffs[degree] != 0, or an empty vector for the zero
// polynomial.  Counting polynomials have nonnegative entries, but signed
// coefficients are legal internally (multiplying by 1 - q^k produces them).
class ExactPolynomial {
public:
    ExactPolynomial() = default;

    static ExactPolynomial zero() { return ExactPolynomial{}; }

    static ExactPolynomial one() {
        ExactPolynomial p;
        p.coeffs_.emplace_back(1);
        return p;
    }

    static ExactPolynomial from_coeffs(std::vector<BigInt> coeffs) {
        ExactPolynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static ExactPolynomial from_coeffs(std::initializer_list<std::int64_t> coeffs) {
        std::vector<BigInt> c(coeffs.begin(), coeffs.end());
        return from_coeffs(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    std::int64_t degree() const noexcept {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    BigInt coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return BigInt(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    BigInt coefficient_sum() const {
        BigInt s = 0;
        for (const BigInt& c : coeffs_) s += c;
        return s;
    }

    bool is_nonnegative() const {
        for (const BigInt& c : coeffs_) {
            if (c < 0) return false;
        }
        return true;
    }

    bool is_palindromic() const {
        const std::size_t n = coeffs_.size();
        for (std::size_t i = 0; i < n / 2; ++i) {
            if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
        }
        return true;
    }

    // Nondecreasing, then nonincreasing.
    bool is_unimodal() const {
        std::size_t i = 1;
        const std::size_t n = coeffs_.size();
        while (i < n && coeffs_[i - 1] <= coeffs_[i]) ++i;
        while (i < n && coeffs_[i - 1] >= coeffs_[i]) ++i;
        return i == n;
    }

    bool operator==(const ExactPolynomial& other) const noexcept = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    friend ExactPolynomial mul(const ExactPolynomial&, const ExactPolynomial&);
    friend ExactPolynomial mul_one_minus_qk(const ExactPolynomial&, std::int64_t);
    friend ExactPolynomial exact_div_one_minus_qk(const ExactPolynomial&, std::int64_t);

    std::vector<BigInt> coeffs_;
};

// Plain convolution; quadratic, which is all the dense desk-scale
// polynomials here need.
inline ExactPolynomial mul(const ExactPolynomial& p, const ExactPolynomial& r) {
    if (p.is_zero() || r.is_zero()) return ExactPolynomial::zero();
    const auto& a = p.coeffs();
    const auto& b = r.coeffs();
    ExactPolynomial out;
    out.coeffs_.assign(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out.coeffs_[i + j] += a[i] * b[j];
        }
    }
    return out;  // leading coefficient a.back()*b.back() != 0, already trimmed
}

inline ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& r) {
    return mul(p, r);
}

// p * (1 - q^k): result_i = p_i - p_{i-k}.
inline ExactPolynomial mul_one_minus_qk(const ExactPolynomial& p, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("mul_one_minus_qk: k must be >= 1");
    if (p.is_zero()) return ExactPolynomial::zero();
    const auto& a = p.coeffs();
    const std::size_t uk = static_cast<std::size_t>(k);
    ExactPolynomial out;
    out.coeffs_.assign(a.size() + uk, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out.coeffs_[i] = a[i];
    for (std::size_t i = 0; i < a.size(); ++i) out.coeffs_[i + uk] -= a[i];
    return out;
}

// Exact quotient p / (1 - q^k) via the strided prefix sum r_i = p_i + r_{i-k}.
// Running the recurrence over the full coefficient range makes the remainder
// visible: the top k running sums must all vanish, otherwise p was not
// divisible.
inline ExactPolynomial exact_div_one_minus_qk(const ExactPolynomial& p, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("exact_div_one_minus_qk: k must be >= 1");
    if (p.is_zero()) return ExactPolynomial::zero();
    const auto& a = p.coeffs();
    const std::size_t uk = static_cast<std::size_t>(k);
    if (a.size() < uk + 1) {
        throw std::domain_error("exact_div_one_minus_qk: not divisible by 1-q^k");
    }
    std::vector<BigInt> s(a);
    for (std::size_t i = uk; i < s.size(); ++i) s[i] += s[i - uk];
    for (std::size_t i = s.size() - uk; i < s.size(); ++i) {
        if (s[i] != 0) {
            throw std::domain_error("exact_div_one_minus_qk: not divisible by 1-q^k");
        }
    }
    s.resize(s.size() - uk);
    ExactPolynomial out;
    out.coeffs_ = std::move(s);
    return out;  // leading entry nonzero since degree(p) = degree(result) + k
}

namespace detail {

// Applies the factor (1 - q^{base+j}) / (1 - q^j) for j = 1..count to acc.
// Multiply and divide are interleaved so the intermediate after each pair is
// itself a q-binomial-product polynomial of bounded degree, never the raw
// numerator product.
inline void apply_gaussian_factors(ExactPolynomial& acc, std::int64_t base, std::int64_t count) {
    for (std::int64_t j = 1; j <= count; ++j) {
        acc = mul_one_minus_qk(acc, base + j);
        acc = exact_div_one_minus_qk(acc, j);
    }
}

}  // namespace detail

// q-binomial coefficient [a+b choose a]_q: degree a*b, palindromic,
// nonnegative coefficients summing to C(a+b, a).  After the j-th
// multiply/divide pair the intermediate equals [a+j choose j]_q.
inline ExactPolynomial gaussian_binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
    ExactPolynomial p = ExactPolynomial::one();
    detail::apply_gaussian_factors(p, a, b);
    if (p.degree() != a * b || !p.is_nonnegative()) {
        throw std::logic_error("gaussian_binomial: internal invariant violated");
    }
    return p;
}

// q-multinomial coefficient of the composition: the product over j = 2..m of
// [A_{j-1} + a_j choose a_j]_q with A_j the prefix sums.  The factors of each
// q-binomial are applied with the same interleaved multiply/divide schedule,
// so intermediates stay at their genuine degree throughout.  Degree e2,
// coefficient sum N!/(a_1!...a_m!).
inline ExactPolynomial q_multinomial(const Composition& comp) {
    ExactPolynomial p = ExactPolynomial::one();
    std::int64_t prefix = comp.parts().front();
    for (std::size_t j = 1; j < comp.parts().size(); ++j) {
        detail::apply_gaussian_factors(p, prefix, comp.parts()[j]);
        prefix += comp.parts()[j];
    }
    if (BigInt(p.degree()) != comp.e2() || !p.is_nonnegative()) {
        throw std::logic_error("q_multinomial: internal invariant violated");
    }
    return p;
}

// Sum_i p_i e^{i*theta*i}, evaluated in floating point (Horner on the unit
// circle; each big-integer coefficient rounded to double once).  Diagnostic
// use only.
inline std::complex<double> eval_unit_circle(const ExactPolynomial& p, double theta) {
    const std::complex<double> w = std::polar(1.0, theta);
    std::complex<double> acc = 0.0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * w + to_double(c[i]);
    }
    return acc;
}

}  // namespace mahonian
