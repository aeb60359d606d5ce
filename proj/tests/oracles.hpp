// oracles.hpp
// Test-only reference computations. Everything here is written from the
// defining formulas with explicit element loops and dense linear algebra,
// and deliberately avoids the library's fast paths.

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"

namespace oracle {

using hyperwalk::complex;
using hyperwalk::Level;
using hyperwalk::StateVector;

inline bool has(std::size_t set, int k) { return (set >> k) & 1U; }

// #(a \ b) counted element by element.
inline int count_difference(std::size_t a, std::size_t b, int order) {
    int c = 0;
    for (int k = 0; k < order; ++k) c += (has(a, k) && !has(b, k)) ? 1 : 0;
    return c;
}

inline int count(std::size_t a, int order) {
    int c = 0;
    for (int k = 0; k < order; ++k) c += has(a, k) ? 1 : 0;
    return c;
}

inline int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// Xi_k Z_sigma = 1_sigma(k) Z_{sigma \ k} + (1 - 1_sigma(k)) Z_{sigma u k}, as a matrix.
inline Eigen::MatrixXd involution_matrix(int k, int order) {
    const std::size_t n = std::size_t{1} << order;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t image = has(s, k) ? (s & ~(std::size_t{1} << k)) : (s | (std::size_t{1} << k));
        m(image, s) = 1.0;
    }
    return m;
}

// sum_k (I - Xi_k)
inline Eigen::MatrixXd laplacian_matrix(int order) {
    const std::size_t n = std::size_t{1} << order;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < order; ++k) m += Eigen::MatrixXd::Identity(n, n) - involution_matrix(k, order);
    return m;
}

// K[gamma][sigma] = (-1)^{#(gamma \ sigma)}, exact integers.
inline Eigen::MatrixXi kernel_matrix(int order) {
    const std::size_t n = std::size_t{1} << order;
    Eigen::MatrixXi k(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t s = 0; s < n; ++s) k(g, s) = parity_sign(count_difference(g, s, order));
    }
    return k;
}

// prod_k (I + E_sigma(k) Xi_k)
inline Eigen::MatrixXd hat_matrix(std::size_t sigma, int order) {
    const std::size_t n = std::size_t{1} << order;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int k = 0; k < order; ++k) {
        const double e = has(sigma, k) ? 1.0 : -1.0;
        m = m * (Eigen::MatrixXd::Identity(n, n) + e * involution_matrix(k, order));
    }
    return m;
}

inline Eigen::VectorXcd to_eigen(const StateVector& v) {
    Eigen::VectorXcd out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out(i) = v[i];
    return out;
}

inline StateVector from_eigen(const Level& level, const Eigen::VectorXcd& x) {
    StateVector v(level);
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = x(i);
    return v;
}

// exp(i t Delta) from a numerical eigendecomposition of the dense Laplacian.
inline Eigen::MatrixXcd propagator_by_eigensolver(int order, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian_matrix(order));
    const Eigen::MatrixXd& v = es.eigenvectors();
    Eigen::VectorXcd phase(v.rows());
    for (Eigen::Index i = 0; i < v.rows(); ++i) phase(i) = std::polar(1.0, t * es.eigenvalues()(i));
    return v.cast<complex>() * phase.asDiagonal() * v.transpose().cast<complex>();
}

// Literal vacuum-start amplitude sum: 2^{-(L+1)} sum_gamma (-1)^{#(sigma\gamma)} e^{2i(L+1-#gamma)t}
inline double pt_literal(std::size_t sigma, double t, int order) {
    const std::size_t n = std::size_t{1} << order;
    complex acc{};
    for (std::size_t g = 0; g < n; ++g) {
        acc += static_cast<double>(parity_sign(count_difference(sigma, g, order))) *
               std::polar(1.0, 2.0 * (order - count(g, order)) * t);
    }
    return std::norm(acc) / (static_cast<double>(n) * static_cast<double>(n));
}

// (2m-1)!! / (2m)!! with arbitrary precision, m = L+1.
inline std::pair<boost::multiprecision::cpp_int, boost::multiprecision::cpp_int> double_factorial_ratio(int L) {
    boost::multiprecision::cpp_int odd = 1, even = 1;
    for (int i = 2 * L + 1; i >= 1; i -= 2) odd *= i;
    for (int i = 2 * L + 2; i >= 2; i -= 2) even *= i;
    const auto g = boost::multiprecision::gcd(odd, even);
    return {odd / g, even / g};
}

inline StateVector random_state(const Level& level, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    StateVector v(level);
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = complex(nd(rng), nd(rng));
    v.normalize();
    return v;
}

inline double random_time(std::mt19937_64& rng, double span = 20.0) {
    return std::uniform_real_distribution<double>(-span, span)(rng);
}

}  // namespace oracle
