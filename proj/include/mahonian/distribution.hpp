#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mahonian/arith.hpp"
#include "mahonian/composition.hpp"
#include "mahonian/polynomial.hpp"

namespace mahonian {

// The inversion-count distribution on words with the given multiset
// signature.  coeffs[k] counts the words with exactly k inversions; total is
// the multinomial coefficient; mu and sigma2 come from the closed forms
// mu = e2/2 and sigma^2 = ((e1+1) e2 - e3)/12.  Immutable after build.
class MahonianDistribution {
public:
    static MahonianDistribution build(Composition comp) {
        MahonianDistribution d(std::move(comp));
        return d;
    }

    static MahonianDistribution build(std::vector<std::int64_t> parts) {
        return build(Composition(std::move(parts)));
    }

    static MahonianDistribution build(std::initializer_list<std::int64_t> parts) {
        return build(Composition(parts));
    }

    const Composition& comp() const noexcept { return comp_; }
    const ExactPolynomial& coeffs() const noexcept { return coeffs_; }
    const BigInt& total() const noexcept { return total_; }
    const Rational& mu() const noexcept { return mu_; }
    const Rational& sigma2() const noexcept { return sigma2_; }

    // Largest attainable inversion count, e2.
    std::int64_t support_max() const noexcept { return coeffs_.degree(); }

    Rational pmf(std::int64_t k) const {
        if (k < 0 || k > support_max()) return Rational(0);
        return Rational(coeffs_.coeff(k), total_);
    }

    Rational cdf(std::int64_t k) const {
        if (k < 0) return Rational(0);
        if (k >= support_max()) return Rational(1);
        BigInt acc = 0;
        for (std::int64_t j = 0; j <= k; ++j) acc += coeffs_.coeff(j);
        return Rational(acc, total_);
    }

    // Floating-point views; the rational overloads are the source of truth.
    double pmf_real(std::int64_t k) const { return to_double(pmf(k)); }
    double cdf_real(std::int64_t k) const { return to_double(cdf(k)); }

private:
    explicit MahonianDistribution(Composition comp)
        : comp_(std::move(comp)),
          coeffs_(q_multinomial(comp_)),
          total_(comp_.word_count()),
          mu_(comp_.mean()),
          sigma2_(comp_.variance()) {}

    Composition comp_;
    ExactPolynomial coeffs_;
    BigInt total_;
    Rational mu_;
    Rational sigma2_;
};

// Unnormalized inversion counts over permutations of n letters,
// prod_{i=1..n} (1 + q + ... + q^{i-1}).
inline ExactPolynomial netto_coeffs(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("netto_coeffs: n must be >= 1");
    return q_multinomial(Composition(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)));
}

// (N^2 Abar / 36, (N+1) N Abar / 12); the variance always lies between them,
// and the upper bound is itself at most N^2 Abar / 6.
inline std::pair<Rational, Rational> sigma_bounds(const Composition& comp) {
    const BigInt n(comp.n());
    const BigInt abar(comp.abar());
    return {Rational(n * n * abar, 36), Rational((n + 1) * n * abar, 12)};
}

}  // namespace mahonian
