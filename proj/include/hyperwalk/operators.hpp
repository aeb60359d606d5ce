// operators.hpp
// The involutions Xi_k, their products Xi_sigma, the signed products
// Xihat_sigma and the Laplacian Delta_L = sum_k (I - Xi_k), all acting on
// canonical-basis amplitudes.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/spectral.hpp"
#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"

namespace hyperwalk {

// Largest dimension for which dense matrices are built (L <= 11).
inline constexpr std::size_t kDenseCap = 4096;

inline void check_element(int k, const Level& level) {
    if (k < 0 || k > level.L()) {
        throw std::out_of_range("element k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(level.L()) + "]");
    }
}

// Xi_k: swaps the amplitudes of every index pair differing in bit k.
inline void apply_involution_in_place(int k, StateVector& state) {
    check_element(k, state.level());
    auto x = state.amplitudes();
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(i & bit)) std::swap(x[i], x[i | bit]);
    }
}

inline StateVector apply_involution(int k, StateVector state) {
    apply_involution_in_place(k, state);
    return state;
}

// Xi_sigma = prod_{k in sigma} Xi_k, i.e. out[gamma] = in[gamma xor sigma].
inline StateVector apply_involution_product(NodeIndex sigma, const StateVector& state) {
    state.level().check(sigma);
    StateVector out(state.level());
    for (std::size_t g = 0; g < state.dim(); ++g) out[g] = state[g ^ sigma.bits];
    return out;
}

// Xihat_sigma = prod_k (I + E_sigma(k) Xi_k) = dim * |Zhat_sigma><Zhat_sigma|.
inline StateVector apply_hat_involution(NodeIndex sigma, const StateVector& state) {
    const complex c = eigen_coefficient(sigma, state);
    StateVector out = eigenvector(sigma, state.level());
    out *= c * static_cast<double>(state.dim());
    return out;
}

// Raw Delta_L xi; not norm preserving.
inline StateVector apply_laplacian(const StateVector& state) {
    const int n = state.level().order();
    StateVector out(state.level());
    for (std::size_t s = 0; s < state.dim(); ++s) {
        complex acc = static_cast<double>(n) * state[s];
        for (int k = 0; k < n; ++k) acc -= state[s ^ (std::size_t{1} << k)];
        out[s] = acc;
    }
    return out;
}

// E_sigma(k) = 2 * 1_sigma(k) - 1
struct SignFunction {
    NodeIndex sigma;
    int operator()(int k) const { return sigma.contains(k) ? 1 : -1; }
};

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<complex> data;  // row-major

    explicit DenseMatrix(std::size_t n) : dim(n), data(n * n) {}

    complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    bool is_hermitian(double tol = 0.0) const {
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = r; c < dim; ++c) {
                if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
            }
        }
        return true;
    }
};

struct OperatorId {
    enum class Kind { laplacian, involution, hat };
    Kind kind = Kind::laplacian;
    int k = 0;          // involution
    NodeIndex sigma{};  // hat

    static OperatorId laplacian() { return {Kind::laplacian, 0, {}}; }
    static OperatorId involution(int k) { return {Kind::involution, k, {}}; }
    static OperatorId hat(NodeIndex s) { return {Kind::hat, 0, s}; }
};

inline StateVector apply_operator(const OperatorId& op, const StateVector& v) {
    switch (op.kind) {
        case OperatorId::Kind::laplacian:
            return apply_laplacian(v);
        case OperatorId::Kind::involution:
            return apply_involution(op.k, v);
        case OperatorId::Kind::hat:
            return apply_hat_involution(op.sigma, v);
    }
    throw std::logic_error("unknown operator kind");
}

// Entry [tau][sigma] = <Z_tau, Op Z_sigma>.
inline DenseMatrix materialize_matrix(const OperatorId& op, const Level& level,
                                      std::size_t cap = kDenseCap) {
    if (level.dim() > cap) {
        throw std::length_error("dimension " + std::to_string(level.dim()) +
                                " exceeds dense cap " + std::to_string(cap));
    }
    if (op.kind == OperatorId::Kind::involution) check_element(op.k, level);
    if (op.kind == OperatorId::Kind::hat) level.check(op.sigma);

    DenseMatrix m(level.dim());
    for (std::size_t s = 0; s < level.dim(); ++s) {
        const StateVector column = apply_operator(op, StateVector::basis(level, NodeIndex{s}));
        for (std::size_t t = 0; t < level.dim(); ++t) m(t, s) = column[t];
    }
    return m;
}

}  // namespace hyperwalk
