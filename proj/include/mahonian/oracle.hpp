#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mahonian/arith.hpp"
#include "mahonian/polynomial.hpp"

namespace mahonian {

// Brute-force ground truth, deliberately independent of the polynomial
// multiply/divide machinery it validates.

// Histogram of inversion counts over every distinct word with the given
// letter multiplicities.  Words are visited with std::next_permutation, so
// each multiset permutation appears exactly once.  Hard size guard: an
// oracle must never return approximate truth.
inline ExactPolynomial enumerate_inversions(std::span<const std::int64_t> parts) {
    std::int64_t n = 0;
    for (std::int64_t a : parts) {
        if (a < 1) throw std::invalid_argument("enumerate_inversions: every part must be >= 1");
        n += a;
    }
    if (parts.empty()) throw std::invalid_argument("enumerate_inversions: no parts");
    if (n > 12) throw std::length_error("enumerate_inversions: N > 12");

    std::vector<std::uint8_t> word;
    word.reserve(static_cast<std::size_t>(n));
    for (std::size_t letter = 0; letter < parts.size(); ++letter) {
        word.insert(word.end(), static_cast<std::size_t>(parts[letter]),
                    static_cast<std::uint8_t>(letter));
    }

    const std::size_t len = word.size();
    std::vector<std::uint64_t> hist(len * (len - 1) / 2 + 1, 0);
    do {
        std::size_t inv = 0;
        for (std::size_t i = 0; i + 1 < len; ++i) {
            for (std::size_t j = i + 1; j < len; ++j) {
                inv += word[i] > word[j];
            }
        }
        ++hist[inv];
    } while (std::next_permutation(word.begin(), word.end()));

    std::vector<BigInt> coeffs(hist.begin(), hist.end());
    return ExactPolynomial::from_coeffs(std::move(coeffs));
}

// Number of partitions of n with at most b parts, each part at most a, as
// the coefficient of q^n.  Standard bounded-partition DP: admit part values
// 1..a one value at a time, tracking how many parts are in use, so no
// polynomial division is involved.
inline ExactPolynomial partitions_in_box(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::invalid_argument("partitions_in_box: negative argument");
    const std::size_t maxn = static_cast<std::size_t>(a * b);
    const std::size_t rows = static_cast<std::size_t>(b);

    // dp[j][n] = partitions of n into exactly j parts, values <= v so far.
    std::vector<std::vector<BigInt>> dp(rows + 1, std::vector<BigInt>(maxn + 1, BigInt(0)));
    dp[0][0] = 1;
    for (std::int64_t v = 1; v <= a; ++v) {
        for (std::size_t j = 1; j <= rows; ++j) {
            for (std::size_t n = static_cast<std::size_t>(v); n <= maxn; ++n) {
                // add one more part of value v (parts of equal value are
                // interchangeable, so this counts each multiset once)
                dp[j][n] += dp[j - 1][n - static_cast<std::size_t>(v)];
            }
        }
    }

    std::vector<BigInt> coeffs(maxn + 1, BigInt(0));
    for (std::size_t j = 0; j <= rows; ++j) {
        for (std::size_t n = 0; n <= maxn; ++n) coeffs[n] += dp[j][n];
    }
    return ExactPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace mahonian
