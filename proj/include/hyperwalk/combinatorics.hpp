// combinatorics.hpp

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hyperwalk {

// Exact binomial coefficient; throws when the result leaves uint64.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i is exact at every step.
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t n, std::uint64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        const std::uint64_t g = std::gcd(n, d);
        return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace hyperwalk
