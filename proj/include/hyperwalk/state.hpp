// state.hpp
// State vectors over the canonical basis {Z_sigma}: amps[sigma] = <Z_sigma, xi>.

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperwalk/subset.hpp"

namespace hyperwalk {

using complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

class StateVector {
public:
    // Zero vector.
    explicit StateVector(Level level) : level_(level), amps_(level.dim()) {}

    StateVector(Level level, std::vector<complex> amps) : level_(level), amps_(std::move(amps)) {
        if (amps_.size() != level_.dim()) {
            throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                        " does not match dim " + std::to_string(level_.dim()));
        }
    }

    // Canonical basis vector Z_sigma; Z_{} is the vacuum.
    static StateVector basis(Level level, NodeIndex sigma) {
        StateVector v(level);
        v.amps_[level.check(sigma).bits] = 1.0;
        return v;
    }

    static StateVector vacuum(Level level) { return basis(level, NodeIndex{}); }

    const Level& level() const { return level_; }
    std::size_t dim() const { return amps_.size(); }

    complex operator[](std::size_t i) const { return amps_[i]; }
    complex& operator[](std::size_t i) { return amps_[i]; }
    complex at(NodeIndex s) const { return amps_[level_.check(s).bits]; }

    std::span<const complex> amplitudes() const { return amps_; }
    std::span<complex> amplitudes() { return amps_; }

    double norm_squared() const {
        double acc = 0.0;
        for (const auto& a : amps_) acc += std::norm(a);
        return acc;
    }
    double norm() const { return std::sqrt(norm_squared()); }

    bool is_normalized(double tol = kNormTolerance) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    StateVector& normalize() {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
        for (auto& a : amps_) a /= n;
        return *this;
    }

    StateVector& operator+=(const StateVector& o) {
        require_same_level(o);
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
        return *this;
    }
    StateVector& operator-=(const StateVector& o) {
        require_same_level(o);
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= o.amps_[i];
        return *this;
    }
    StateVector& operator*=(complex s) {
        for (auto& a : amps_) a *= s;
        return *this;
    }

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(complex s, StateVector a) { return a *= s; }

    void require_same_level(const StateVector& o) const {
        if (!(level_ == o.level_)) {
            throw std::invalid_argument("state vectors belong to different levels");
        }
    }

private:
    Level level_;
    std::vector<complex> amps_;
};

// Conjugate-linear in the first argument.
inline complex inner_product(const StateVector& a, const StateVector& b) {
    a.require_same_level(b);
    complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double distance(const StateVector& a, const StateVector& b) { return (a - b).norm(); }

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
    a.require_same_level(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace hyperwalk
