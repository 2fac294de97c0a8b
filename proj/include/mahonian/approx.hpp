#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mahonian/arith.hpp"
#include "mahonian/distribution.hpp"
#include "mahonian/moments.hpp"
#include "mahonian/polynomial.hpp"

namespace mahonian {

namespace detail {

inline double normal_density(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Probabilists' Hermite polynomial He_n(x).
inline double hermite_he(int n, double x) {
    double prev = 1.0, cur = x;
    if (n == 0) return prev;
    for (int i = 1; i < n; ++i) {
        const double next = x * cur - i * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Exact rationals are compared in double precision only at the very end;
// sup-errors at rounding-noise scale are floored to zero.
constexpr double kSupErrorFloor = 1e-12;

inline double floor_tiny(double x) { return x < kSupErrorFloor ? 0.0 : x; }

inline void require_nondegenerate(const MahonianDistribution& d) {
    if (d.sigma2() == 0) {
        throw std::domain_error("degenerate distribution: sigma^2 = 0 (single letter class)");
    }
}

}  // namespace detail

// Normal density at k with the distribution's exact mean and variance:
// the leading term of the local limit approximation.
inline double gaussian_pmf(const MahonianDistribution& d, std::int64_t k) {
    detail::require_nondegenerate(d);
    const double sigma = std::sqrt(to_double(d.sigma2()));
    const double x = (static_cast<double>(k) - to_double(d.mu())) / sigma;
    return detail::normal_density(x) / sigma;
}

// Symmetric Edgeworth refinement of the normal density.  Odd-order terms
// vanish because the distribution is symmetric about its mean, so the
// correction carries the kappa_4, kappa_6 and kappa_4^2 terms:
//   phi(x)/sigma [1 + (k4/24 s^4) He4 + (k6/720 s^6) He6 + (k4^2/1152 s^8) He8].
// The cumulants come exactly from the coefficient vector.
class EdgeworthExpansion {
public:
    explicit EdgeworthExpansion(const MahonianDistribution& d)
        : mu_(to_double(d.mu())), sigma2_(d.sigma2()) {
        detail::require_nondegenerate(d);
        const auto m = exact_central_moments(d, 6);
        kappa4_ = m[4] - 3 * sigma2_ * sigma2_;
        kappa6_ = m[6] - 15 * m[4] * sigma2_ + 30 * sigma2_ * sigma2_ * sigma2_;
        const Rational s4 = sigma2_ * sigma2_;
        lambda4_ = to_double(kappa4_ / s4);
        lambda6_ = to_double(kappa6_ / (s4 * sigma2_));
        sigma_ = std::sqrt(to_double(sigma2_));
    }

    double pmf(std::int64_t k) const {
        const double x = (static_cast<double>(k) - mu_) / sigma_;
        const double correction = 1.0 + lambda4_ / 24.0 * detail::hermite_he(4, x) +
                                  lambda6_ / 720.0 * detail::hermite_he(6, x) +
                                  lambda4_ * lambda4_ / 1152.0 * detail::hermite_he(8, x);
        return detail::normal_density(x) / sigma_ * correction;
    }

    const Rational& kappa4() const noexcept { return kappa4_; }
    const Rational& kappa6() const noexcept { return kappa6_; }

private:
    double mu_;
    Rational sigma2_;
    double sigma_;
    Rational kappa4_;
    Rational kappa6_;
    double lambda4_;
    double lambda6_;
};

inline double edgeworth_pmf(const MahonianDistribution& d, std::int64_t k) {
    return EdgeworthExpansion(d).pmf(k);
}

struct PerKEntry {
    std::int64_t k;
    double pmf_exact;
    double pmf_approx;
};

// Local-limit and CLT error diagnostics of one distribution against the
// normal approximation.  scaled_llt_error = sqrt(2 pi) sigma Abar sup_k
// |pmf - gaussian| is the quantity that stays bounded if the O(1/Abar) local
// limit error term holds.
struct ApproxReport {
    Composition comp;
    double sup_abs_error = 0.0;
    double scaled_llt_error = 0.0;
    double kolmogorov = 0.0;
    std::optional<std::vector<PerKEntry>> per_k;
};

struct LocalLimitOptions {
    bool include_per_k = false;
    // Evaluate Phi at k + 1/2 instead of k when comparing CDFs.  Off by
    // default: the CLT statement normalizes without correction.
    bool continuity_correction = false;
};

inline ApproxReport local_limit_report(const MahonianDistribution& d,
                                       const LocalLimitOptions& options = {}) {
    detail::require_nondegenerate(d);
    const double mu = to_double(d.mu());
    const double sigma = std::sqrt(to_double(d.sigma2()));
    const double shift = options.continuity_correction ? 0.5 : 0.0;

    ApproxReport report{d.comp(), 0.0, 0.0, 0.0, std::nullopt};
    if (options.include_per_k) report.per_k.emplace();

    BigInt cumulative = 0;
    const auto& c = d.coeffs().coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double p_exact = to_double(Rational(c[k], d.total()));
        const double x = (static_cast<double>(k) - mu) / sigma;
        const double p_gauss = detail::normal_density(x) / sigma;
        report.sup_abs_error = std::max(report.sup_abs_error, std::abs(p_exact - p_gauss));

        cumulative += c[k];
        const double cdf_exact = to_double(Rational(cumulative, d.total()));
        const double cdf_gauss =
            detail::normal_cdf((static_cast<double>(k) + shift - mu) / sigma);
        report.kolmogorov = std::max(report.kolmogorov, std::abs(cdf_exact - cdf_gauss));

        if (report.per_k) report.per_k->push_back({static_cast<std::int64_t>(k), p_exact, p_gauss});
    }

    report.sup_abs_error = detail::floor_tiny(report.sup_abs_error);
    report.kolmogorov = detail::floor_tiny(report.kolmogorov);
    report.scaled_llt_error = std::sqrt(2.0 * std::numbers::pi) * sigma *
                              static_cast<double>(d.comp().abar()) * report.sup_abs_error;
    return report;
}

// One log-concavity sample: delta = c_j^2 - c_{j-1} c_{j+1}, exact.  n is
// the table parameter for rows of central_delta_table and 0 for free-range scans.
struct LogConcavityRecord {
    std::int64_t n;
    std::int64_t j;
    BigInt delta;
};

inline std::vector<LogConcavityRecord> logconcavity_scan(const MahonianDistribution& d,
                                                         std::int64_t jlo, std::int64_t jhi) {
    if (jlo < 1 || jlo > jhi || jhi > d.support_max() - 1) {
        throw std::invalid_argument("logconcavity_scan: range must satisfy 1 <= jlo <= jhi <= e2-1");
    }
    const auto& c = d.coeffs().coeffs();
    std::vector<LogConcavityRecord> records;
    records.reserve(static_cast<std::size_t>(jhi - jlo + 1));
    for (std::int64_t j = jlo; j <= jhi; ++j) {
        const std::size_t uj = static_cast<std::size_t>(j);
        records.push_back({0, j, c[uj] * c[uj] - c[uj - 1] * c[uj + 1]});
    }
    return records;
}

// The empirical log-concavity table: for n = 2, 4, ..., nmax the delta of
// the central coefficients of [2n choose n]_q at j = n^2/2 - 1.
inline std::vector<LogConcavityRecord> central_delta_table(std::int64_t nmax) {
    if (nmax < 2 || nmax % 2 != 0) throw std::invalid_argument("central_delta_table: nmax must be even and >= 2");
    std::vector<LogConcavityRecord> rows;
    for (std::int64_t n = 2; n <= nmax; n += 2) {
        const ExactPolynomial c = gaussian_binomial(n, n);
        const std::int64_t j = n * n / 2 - 1;
        const std::size_t uj = static_cast<std::size_t>(j);
        const auto& cc = c.coeffs();
        rows.push_back({n, j, cc[uj] * cc[uj] - cc[uj - 1] * cc[uj + 1]});
    }
    return rows;
}

// Asymptotic size of those table entries: (18/pi^2) n^-7 2^{4n}.
inline double logconcavity_asymptotic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("logconcavity_asymptotic: n must be >= 1");
    return 18.0 / (std::numbers::pi * std::numbers::pi) *
           std::ldexp(1.0, static_cast<int>(4 * n)) / std::pow(static_cast<double>(n), 7.0);
}

// Irwin-Hall CDF: law of the sum of n independent Uniform[0,1] variables,
// clamped to [0,1].
inline double irwin_hall_cdf(double x, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("irwin_hall_cdf: n must be >= 1");
    if (x <= 0.0) return 0.0;
    if (x >= static_cast<double>(n)) return 1.0;
    double acc = 0.0;
    double sign = 1.0;
    double binom = 1.0;
    const std::int64_t jmax = static_cast<std::int64_t>(std::floor(x));
    for (std::int64_t j = 0; j <= jmax; ++j) {
        acc += sign * binom * std::pow(x - static_cast<double>(j), static_cast<double>(n));
        sign = -sign;
        binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
    }
    for (std::int64_t i = 2; i <= n; ++i) acc /= static_cast<double>(i);
    return std::min(std::max(acc, 0.0), 1.0);
}

struct IrwinHallOptions {
    // Compare at (k + 1/2)/amax instead of (k+1)/amax.
    bool half_step = false;
};

// Sup-distance between the exact CDF and the Irwin-Hall CDF with Abar
// summands, after scaling inversions by the largest part.  In the fixed-Abar
// regime the number of inversions over the largest part converges to a sum
// of Abar independent uniforms.
inline double irwin_hall_compare(const MahonianDistribution& d,
                                 const IrwinHallOptions& options = {}) {
    const std::int64_t abar = d.comp().abar();
    if (abar < 1) throw std::domain_error("irwin_hall_compare: Abar = 0 (single letter class)");
    const double scale = static_cast<double>(d.comp().amax());
    const double offset = options.half_step ? 0.5 : 1.0;

    double sup = 0.0;
    BigInt cumulative = 0;
    const auto& c = d.coeffs().coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        cumulative += c[k];
        const double cdf_exact = to_double(Rational(cumulative, d.total()));
        const double cdf_ih = irwin_hall_cdf((static_cast<double>(k) + offset) / scale, abar);
        sup = std::max(sup, std::abs(cdf_exact - cdf_ih));
    }
    return detail::floor_tiny(sup);
}

}  // namespace mahonian
