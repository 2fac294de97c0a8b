#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mahonian/arith.hpp"

namespace mahonian {

// Multiset signature (a_1, ..., a_m): a_j copies of letter j.  Immutable
// after construction.  Carries the derived quantities every formula in the
// library consumes: N = e1, amax, abar = N - amax, and the elementary
// symmetric functions e2, e3 of the parts.
class Composition {
public:
    explicit Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Composition: no parts");
        // e_{k+1} picks up e_k * a over the prefix before a joins e_k itself,
        // which is exactly the sum over increasing index tuples.
        BigInt e1 = 0, e2 = 0, e3 = 0;
        for (std::int64_t a : parts_) {
            if (a < 1) throw std::invalid_argument("Composition: every part must be >= 1");
            e3 += e2 * a;
            e2 += e1 * a;
            e1 += a;
        }
        n_ = e1.convert_to<std::int64_t>();
        amax_ = *std::max_element(parts_.begin(), parts_.end());
        e2_ = std::move(e2);
        e3_ = std::move(e3);
    }

    Composition(std::initializer_list<std::int64_t> parts)
        : Composition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::size_t num_letters() const noexcept { return parts_.size(); }

    std::int64_t n() const noexcept { return n_; }           // e1, word length
    std::int64_t amax() const noexcept { return amax_; }
    std::int64_t abar() const noexcept { return n_ - amax_; }

    const BigInt& e2() const noexcept { return e2_; }
    const BigInt& e3() const noexcept { return e3_; }

    // mu = e2/2, sigma^2 = ((e1+1) e2 - e3)/12, exact.
    Rational mean() const { return Rational(e2_, 2); }
    Rational variance() const { return Rational((BigInt(n_) + 1) * e2_ - e3_, 12); }

    BigInt word_count() const { return multinomial(parts_); }

    bool operator==(const Composition& other) const noexcept { return parts_ == other.parts_; }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t n_ = 0;
    std::int64_t amax_ = 0;
    BigInt e2_;
    BigInt e3_;
};

// Strips zero parts and sorts descending.  Construction itself rejects zero
// parts; callers that want silent normalization must opt in through this.
inline std::vector<std::int64_t> canonical_parts(std::span<const std::int64_t> parts) {
    std::vector<std::int64_t> out;
    out.reserve(parts.size());
    for (std::int64_t a : parts) {
        if (a < 0) throw std::invalid_argument("canonical_parts: negative part");
        if (a > 0) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace mahonian
