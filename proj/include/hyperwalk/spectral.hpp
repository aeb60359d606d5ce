// spectral.hpp
// Eigenbasis of the Laplacian and the change of basis to and from it.
//
// The eigenvectors are the signed Walsh vectors
//
//     Zhat_sigma = 2^{-(L+1)/2} * sum_gamma (-1)^{#(gamma \ sigma)} Z_gamma,
//
// with Laplacian eigenvalue 2(L+1 - #sigma). Since
// (-1)^{#(gamma \ sigma)} = (-1)^{#gamma} (-1)^{#(gamma & sigma)}, the kernel
// factors as a diagonal sign times the ordinary +-1 Hadamard kernel, which is
// applied with an in-place butterfly in O(dim * (L+1)).

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "hyperwalk/combinatorics.hpp"
#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"

namespace hyperwalk {

inline int eigenvalue_of(NodeIndex sigma, const Level& level) {
    return 2 * (level.order() - cardinality(level.check(sigma)));
}

// (-1)^{#(gamma \ sigma)}, the literal eigenvector kernel.
inline int kernel_sign(NodeIndex gamma, NodeIndex sigma) {
    return (cardinality(set_difference(gamma, sigma)) & 1) ? -1 : 1;
}

struct SpectrumEntry {
    int eigenvalue = 0;
    std::uint64_t multiplicity = 0;
    // #sigma shared by the eigenvectors Zhat_sigma spanning this eigenspace.
    int card = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Spectrum {
    Level level;
    std::vector<SpectrumEntry> entries;  // ascending eigenvalue
};

inline Spectrum spectrum(const Level& level) {
    Spectrum s{level, {}};
    const int n = level.order();
    // k runs to L+1 inclusive: the top eigenvalue 2(L+1) belongs to Zhat_{} alone.
    for (int k = 0; k <= n; ++k) {
        s.entries.push_back({2 * k, binomial(n, n - k), n - k});
    }
    return s;
}

// Unnormalized Walsh-Hadamard transform: x <- H x with H[i][j] = (-1)^{popcount(i & j)}.
// Size must be a power of two.
inline void walsh_hadamard_in_place(std::span<complex> x) {
    const std::size_t n = x.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t block = 0; block < n; block += 2 * h) {
            for (std::size_t j = block; j < block + h; ++j) {
                const complex a = x[j];
                const complex b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
        }
    }
}

namespace detail {

inline void sign_and_scale(std::span<complex> x, double scale) {
    for (std::size_t g = 0; g < x.size(); ++g) {
        x[g] *= (std::popcount(g) & 1) ? -scale : scale;
    }
}

}  // namespace detail

// c[sigma] = <Zhat_sigma, xi>
inline void to_eigenbasis_in_place(StateVector& state) {
    auto x = state.amplitudes();
    detail::sign_and_scale(x, 1.0 / std::sqrt(static_cast<double>(x.size())));
    walsh_hadamard_in_place(x);
}

// amps[gamma] = sum_sigma c[sigma] Zhat_sigma[gamma]
inline void from_eigenbasis_in_place(StateVector& coeffs) {
    auto x = coeffs.amplitudes();
    walsh_hadamard_in_place(x);
    detail::sign_and_scale(x, 1.0 / std::sqrt(static_cast<double>(x.size())));
}

inline StateVector to_eigenbasis(StateVector state) {
    to_eigenbasis_in_place(state);
    return state;
}

inline StateVector from_eigenbasis(StateVector coeffs) {
    from_eigenbasis_in_place(coeffs);
    return coeffs;
}

// Zhat_sigma expanded in the canonical basis.
inline StateVector eigenvector(NodeIndex sigma, const Level& level) {
    level.check(sigma);
    StateVector v(level);
    const double scale = 1.0 / std::sqrt(static_cast<double>(level.dim()));
    for (std::size_t g = 0; g < v.dim(); ++g) {
        v[g] = scale * kernel_sign(NodeIndex{g}, sigma);
    }
    return v;
}

// Single coefficient <Zhat_sigma, xi> in O(dim).
inline complex eigen_coefficient(NodeIndex sigma, const StateVector& state) {
    state.level().check(sigma);
    complex acc{};
    for (std::size_t g = 0; g < state.dim(); ++g) {
        if (kernel_sign(NodeIndex{g}, sigma) > 0) {
            acc += state[g];
        } else {
            acc -= state[g];
        }
    }
    return acc / std::sqrt(static_cast<double>(state.dim()));
}

}  // namespace hyperwalk
