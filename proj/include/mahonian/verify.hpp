#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mahonian/approx.hpp"
#include "mahonian/arith.hpp"
#include "mahonian/composition.hpp"
#include "mahonian/distribution.hpp"
#include "mahonian/moments.hpp"
#include "mahonian/oracle.hpp"
#include "mahonian/polynomial.hpp"

namespace mahonian {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success
};

// Visits every composition of n (ordered tuples of positive parts); a
// composition corresponds to a choice of break points between positions.
inline void for_each_composition(std::int64_t n,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    const std::uint64_t masks = std::uint64_t(1) << (n - 1);
    std::vector<std::int64_t> parts;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        parts.clear();
        std::int64_t run = 1;
        for (std::int64_t gap = 0; gap < n - 1; ++gap) {
            if (mask & (std::uint64_t(1) << gap)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        fn(parts);
    }
}

namespace detail {

inline std::string parts_string(const std::vector<std::int64_t>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace detail

// The ten empirical central log-concavity deltas for (n,n), n = 2..20.
inline const std::vector<std::pair<std::int64_t, const char*>>& reference_table_values() {
    static const std::vector<std::pair<std::int64_t, const char*>> rows = {
        {2, "-1"},           {4, "-7"},           {6, "-165"},
        {8, "-1529"},        {10, "44160"},       {12, "7715737"},
        {14, "905559058"},   {16, "101507214165"}, {18, "11955335854893"},
        {20, "1501943866215277"},
    };
    return rows;
}

inline std::vector<PropertyResult> verify_oracle() {
    std::vector<PropertyResult> results;

    {
        PropertyResult r{"q_multinomial equals word enumeration for all compositions, N <= 10", true, ""};
        for (std::int64_t n = 1; n <= 10 && r.passed; ++n) {
            for_each_composition(n, [&](const std::vector<std::int64_t>& parts) {
                if (!r.passed) return;
                if (q_multinomial(Composition(parts)) != enumerate_inversions(parts)) {
                    r.passed = false;
                    r.detail = "mismatch at " + detail::parts_string(parts);
                }
            });
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"gaussian_binomial equals partitions-in-a-box DP for a,b <= 25", true, ""};
        for (std::int64_t a = 0; a <= 25 && r.passed; ++a) {
            for (std::int64_t b = 0; b <= 25 && r.passed; ++b) {
                if (gaussian_binomial(a, b) != partitions_in_box(a, b)) {
                    r.passed = false;
                    r.detail = "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
                }
            }
        }
        results.push_back(std::move(r));
    }

    return results;
}

inline std::vector<PropertyResult> verify_moments() {
    std::vector<PropertyResult> results;

    {
        PropertyResult r{"recurrence binomial moments equal direct binomial moments, a+b <= 10, R = 8", true, ""};
        for (std::int64_t a = 1; a <= 9 && r.passed; ++a) {
            for (std::int64_t b = 1; a + b <= 10 && r.passed; ++b) {
                const auto d = MahonianDistribution::build({a, b});
                if (binomial_moments_recurrence(a, b, 8) != exact_binomial_moments(d, 8)) {
                    r.passed = false;
                    r.detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"Stirling conversion of recurrence moments equals direct central moments", true, ""};
        for (std::int64_t a = 1; a <= 9 && r.passed; ++a) {
            for (std::int64_t b = 1; a + b <= 10 && r.passed; ++b) {
                const auto d = MahonianDistribution::build({a, b});
                if (central_from_binomial(binomial_moments_recurrence(a, b, 8)) !=
                    exact_central_moments(d, 8)) {
                    r.passed = false;
                    r.detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"p2 = (2a+b)b/24 and p3 = -(2a+b)b/24 for a,b in {1..6}", true, ""};
        for (std::int64_t a = 1; a <= 6 && r.passed; ++a) {
            for (std::int64_t b = 1; b <= 6 && r.passed; ++b) {
                const auto p = p_series(a, b, 3);
                const Rational expected((2 * a + b) * b, 24);
                if (p.c[0] != 1 || p.c[1] != 0 || p.c[2] != expected || p.c[3] != -expected) {
                    r.passed = false;
                    r.detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        }
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"closed-form mean and variance match moment sums for all compositions, N <= 10", true, ""};
        for (std::int64_t n = 1; n <= 10 && r.passed; ++n) {
            for_each_composition(n, [&](const std::vector<std::int64_t>& parts) {
                if (!r.passed) return;
                const auto d = MahonianDistribution::build(parts);
                const auto m = exact_central_moments(d, 3);
                Rational mean_sum = 0;
                for (std::int64_t k = 0; k <= d.support_max(); ++k) {
                    mean_sum += Rational(k) * d.pmf(k);
                }
                if (mean_sum != d.mu() || m[2] != d.sigma2() || m[1] != 0 || m[3] != 0) {
                    r.passed = false;
                    r.detail = "mismatch at " + detail::parts_string(parts);
                }
            });
        }
        results.push_back(std::move(r));
    }

    return results;
}

inline std::vector<PropertyResult> verify_table() {
    PropertyResult r{"central log-concavity deltas of [2n choose n]_q for n = 2..20", true, ""};
    const auto rows = central_delta_table(20);
    const auto& expected = reference_table_values();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (rows[i].n != expected[i].first || rows[i].delta != BigInt(expected[i].second)) {
            r.passed = false;
            r.detail = "mismatch at n=" + std::to_string(expected[i].first);
            break;
        }
    }
    return {std::move(r)};
}

inline std::vector<PropertyResult> verify_bounds_and_shape() {
    std::vector<PropertyResult> results;

    {
        PropertyResult r{"variance bounds N^2*Abar/36 <= sigma^2 <= (N+1)*N*Abar/12 <= N^2*Abar/6", true, ""};
        const auto check = [&](const Composition& comp) {
            if (!r.passed) return;
            const auto [lower, upper] = sigma_bounds(comp);
            const Rational sixth(BigInt(comp.n()) * comp.n() * comp.abar(), 6);
            const Rational s2 = comp.variance();
            if (!(lower <= s2 && s2 <= upper && upper <= sixth)) {
                r.passed = false;
                r.detail = "violated at " + detail::parts_string(comp.parts());
            }
        };
        for (std::int64_t n = 1; n <= 12 && r.passed; ++n) {
            for_each_composition(n, [&](const std::vector<std::int64_t>& parts) { check(Composition(parts)); });
        }
        for (std::int64_t n = 1; n <= 50 && r.passed; ++n) check(Composition{n, n});
        results.push_back(std::move(r));
    }

    {
        PropertyResult r{"coefficient vectors are palindromic and unimodal, N <= 12 and (n,n) for n <= 30", true, ""};
        const auto check = [&](const Composition& comp) {
            if (!r.passed) return;
            const auto p = q_multinomial(comp);
            if (!p.is_palindromic() || !p.is_unimodal()) {
                r.passed = false;
                r.detail = "violated at " + detail::parts_string(comp.parts());
            }
        };
        for (std::int64_t n = 1; n <= 12 && r.passed; ++n) {
            for_each_composition(n, [&](const std::vector<std::int64_t>& parts) { check(Composition(parts)); });
        }
        for (std::int64_t n = 1; n <= 30 && r.passed; ++n) check(Composition{n, n});
        results.push_back(std::move(r));
    }

    return results;
}

inline std::vector<PropertyResult> verify_all() {
    std::vector<PropertyResult> results;
    const auto append = [&results](std::vector<PropertyResult> batch) {
        for (auto& r : batch) results.push_back(std::move(r));
    };
    append(verify_oracle());
    append(verify_moments());
    append(verify_table());
    append(verify_bounds_and_shape());
    return results;
}

}  // namespace mahonian
