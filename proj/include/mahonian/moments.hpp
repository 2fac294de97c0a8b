#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mahonian/arith.hpp"
#include "mahonian/composition.hpp"
#include "mahonian/distribution.hpp"

namespace mahonian {

// Truncated power series in z over exact rationals.  The truncation order is
// fixed at construction; arithmetic never consults dropped terms.
struct RationalSeries {
    std::vector<Rational> c;  // c[i] is the z^i coefficient, size order+1

    std::size_t order() const noexcept { return c.empty() ? 0 : c.size() - 1; }
};

namespace detail {

// (1+z)^x as a truncated series, x rational (generalized binomial theorem).
inline RationalSeries binomial_series(const Rational& x, std::size_t order) {
    RationalSeries s;
    s.c.resize(order + 1);
    Rational term = 1;
    s.c[0] = term;
    for (std::size_t i = 1; i <= order; ++i) {
        term *= (x - Rational(static_cast<std::int64_t>(i) - 1)) / Rational(static_cast<std::int64_t>(i));
        s.c[i] = term;
    }
    return s;
}

inline RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t order = a.order();
    RationalSeries out;
    out.c.assign(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

inline RationalSeries series_div(const RationalSeries& num, const RationalSeries& den) {
    if (den.c.empty() || den.c[0] == 0) {
        throw std::domain_error("series_div: denominator has zero constant term");
    }
    const std::size_t order = num.order();
    RationalSeries out;
    out.c.assign(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        Rational acc = num.c[i];
        for (std::size_t j = 1; j <= i; ++j) {
            acc -= den.c[j] * out.c[i - j];
        }
        out.c[i] = acc / den.c[0];
    }
    return out;
}

}  // namespace detail

// Taylor coefficients p_0..p_smax of
//   P(a,b,z) = a (1-(1+z)^{a+b}) / ((1+z)^{b/2} (a+b) (1-(1+z)^a)),
// the ratio of consecutive shifted generating functions in a.  Numerator and
// denominator share one factor of z, which is cancelled before the truncated
// division; the half-integer power is expanded with generalized binomial
// coefficients, so everything stays rational.  p_0 = 1 and p_1 = 0.
inline RationalSeries p_series(std::int64_t a, std::int64_t b, std::size_t smax) {
    if (a < 1 || b < 1) throw std::invalid_argument("p_series: a, b must be >= 1");
    if (smax < 1) throw std::invalid_argument("p_series: smax must be >= 1");

    RationalSeries num;  //  a * (1-(1+z)^{a+b}) / (-z)
    num.c.resize(smax + 1);
    for (std::size_t i = 0; i <= smax; ++i) {
        num.c[i] = Rational(a * binomial(static_cast<std::uint64_t>(a + b), i + 1));
    }

    RationalSeries den;  //  (a+b) * (1-(1+z)^a) / (-z)
    den.c.resize(smax + 1);
    for (std::size_t i = 0; i <= smax; ++i) {
        den.c[i] = Rational((a + b) * binomial(static_cast<std::uint64_t>(a), i + 1));
    }
    den = detail::series_mul(den, detail::binomial_series(Rational(b, 2), smax));

    return detail::series_div(num, den);
}

// Binomial moments A_0..A_R of the two-letter distribution shifted to its
// mean, by iterating a' = 1..a from the point mass at a' = 0:
//   A_r(a',b) = A_r(a'-1,b) + sum_{s=1..r} A_{r-s}(a'-1,b) p_s(a',b).
inline std::vector<Rational> binomial_moments_recurrence(std::int64_t a, std::int64_t b, int order) {
    if (a < 1 || b < 1) throw std::invalid_argument("binomial_moments_recurrence: a, b must be >= 1");
    if (order < 1) throw std::invalid_argument("binomial_moments_recurrence: order must be >= 1");

    const std::size_t r_max = static_cast<std::size_t>(order);
    std::vector<Rational> prev(r_max + 1, Rational(0));
    prev[0] = 1;
    std::vector<Rational> cur(r_max + 1);
    for (std::int64_t ap = 1; ap <= a; ++ap) {
        const RationalSeries p = p_series(ap, b, r_max);
        for (std::size_t r = 0; r <= r_max; ++r) {
            Rational acc = prev[r];
            for (std::size_t s = 1; s <= r; ++s) {
                acc += prev[r - s] * p.c[s];
            }
            cur[r] = acc;
        }
        prev.swap(cur);
    }
    return prev;
}

// Stirling numbers of the second kind S(n,k) for n,k <= order.
inline std::vector<std::vector<BigInt>> stirling2_table(int order) {
    const std::size_t n_max = static_cast<std::size_t>(order);
    std::vector<std::vector<BigInt>> s(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    s[0][0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            s[n][k] = s[n - 1][k - 1] + k * s[n - 1][k];
        }
    }
    return s;
}

// Central moments from binomial moments via the falling-factorial expansion
// of powers: mu_n = sum_k S(n,k) k! A_k.
inline std::vector<Rational> central_from_binomial(const std::vector<Rational>& binomial_moments) {
    if (binomial_moments.empty()) return {};
    const int order = static_cast<int>(binomial_moments.size()) - 1;
    const auto s = stirling2_table(order);
    std::vector<Rational> mu(binomial_moments.size());
    for (std::size_t n = 0; n < mu.size(); ++n) {
        Rational acc = 0;
        BigInt kfact = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) kfact *= k;
            if (s[n][k] != 0) acc += Rational(s[n][k] * kfact) * binomial_moments[k];
        }
        mu[n] = acc;
    }
    return mu;
}

// Central moments straight off the coefficient vector:
//   mu_r = sum_k pmf(k) (k - mu)^r.
// Since 2*mu = e2 is an integer, (k - mu)^r = (2k - e2)^r / 2^r, so the sums
// accumulate over big integers and a single rational division lands each
// moment.  Independent of the recurrence path it cross-checks.
inline std::vector<Rational> exact_central_moments(const MahonianDistribution& d, int order) {
    if (order < 0) throw std::invalid_argument("exact_central_moments: order must be >= 0");
    const BigInt two_mu = d.comp().e2();
    const auto& c = d.coeffs().coeffs();

    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const BigInt dev = 2 * BigInt(k) - two_mu;
        BigInt term = c[k];
        for (std::size_t r = 0; r < acc.size(); ++r) {
            acc[r] += term;
            term *= dev;
        }
    }

    std::vector<Rational> mu(acc.size());
    BigInt scale = 1;  // 2^r * total
    for (std::size_t r = 0; r < acc.size(); ++r) {
        mu[r] = Rational(acc[r], scale * d.total());
        scale *= 2;
    }
    return mu;
}

// Binomial moments straight off the coefficient vector, with generalized
// binomials at the possibly half-integer argument k - mu:
//   A_r = sum_k pmf(k) C(k - mu, r),  C(x,r) = x(x-1)...(x-r+1)/r!.
inline std::vector<Rational> exact_binomial_moments(const MahonianDistribution& d, int order) {
    if (order < 0) throw std::invalid_argument("exact_binomial_moments: order must be >= 0");
    const BigInt two_mu = d.comp().e2();
    const auto& c = d.coeffs().coeffs();

    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const BigInt dev = 2 * BigInt(k) - two_mu;
        BigInt term = c[k];  // c_k * prod_{i<r} (2k - e2 - 2i)
        for (std::size_t r = 0; r < acc.size(); ++r) {
            acc[r] += term;
            term *= dev - 2 * BigInt(r);
        }
    }

    std::vector<Rational> a(acc.size());
    BigInt scale = 1;  // 2^r * r! * total
    for (std::size_t r = 0; r < acc.size(); ++r) {
        if (r > 0) scale *= 2 * BigInt(r);
        a[r] = Rational(acc[r], scale * d.total());
    }
    return a;
}

// Closed-form asymptotic for the normalized moment alpha_{2r} of the
// composition (a*t, b*t):
//   (2r)!/(2^r r!) * (1 - r(r-1)(b^2+ab+a^2) / (5ab(a+b)) * 1/t),
// with an O(t^-2) remainder dropped.
inline double alpha_asymptotic(int r, std::int64_t a, std::int64_t b, std::int64_t t) {
    if (r < 1) throw std::invalid_argument("alpha_asymptotic: r must be >= 1");
    if (a < 1 || b < 1 || t < 1) throw std::invalid_argument("alpha_asymptotic: a, b, t must be >= 1");
    const Rational lead(factorial(static_cast<std::uint64_t>(2 * r)),
                        (BigInt(1) << r) * factorial(static_cast<std::uint64_t>(r)));
    const Rational correction =
        Rational(BigInt(r) * (r - 1) * (BigInt(b) * b + BigInt(a) * b + BigInt(a) * a),
                 5 * BigInt(a) * b * (a + b) * t);
    return to_double(lead * (1 - correction));
}

// Exact binomial and central moments of one composition up to the given
// order.
struct MomentTable {
    Composition comp;
    int order;
    std::vector<Rational> binomial;
    std::vector<Rational> central;
};

inline MomentTable moment_table_exact(const MahonianDistribution& d, int order) {
    return MomentTable{d.comp(), order, exact_binomial_moments(d, order),
                       exact_central_moments(d, order)};
}

inline MomentTable moment_table_recurrence(std::int64_t a, std::int64_t b, int order) {
    auto binomial_moments = binomial_moments_recurrence(a, b, order);
    auto central = central_from_binomial(binomial_moments);
    return MomentTable{Composition{a, b}, order, std::move(binomial_moments), std::move(central)};
}

}  // namespace mahonian
