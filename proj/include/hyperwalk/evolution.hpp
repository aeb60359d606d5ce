// evolution.hpp
// xi_t = exp(i t Delta_L) xi_0 through three independent engines:
//
//   spectral  eigenbasis transform, phase e^{2i(L+1-#sigma)t}, inverse transform
//   product   prod_k exp(i t (I - Xi_k)) = prod_k e^{it}(cos t I - i sin t Xi_k)
//   dense     explicit eigenvector matrix built from the literal kernel
//
// The propagator is pi-periodic, so times are first reduced to [0, pi).

#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/operators.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/state.hpp"

namespace hyperwalk {

enum class EngineKind { spectral, product, dense };

enum class NormPolicy { reject, normalize };

inline std::string_view to_string(EngineKind k) {
    switch (k) {
        case EngineKind::spectral: return "spectral";
        case EngineKind::product: return "product";
        case EngineKind::dense: return "dense";
    }
    return "?";
}

inline EngineKind parse_engine(std::string_view s) {
    if (s == "spectral") return EngineKind::spectral;
    if (s == "product") return EngineKind::product;
    if (s == "dense") return EngineKind::dense;
    throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

inline void check_time(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
}

// Canonical representative of t modulo pi in [0, pi).
inline double reduce_time(double t) {
    check_time(t);
    constexpr double pi = std::numbers::pi;
    double r = std::fmod(t, pi);
    if (r < 0.0) r += pi;
    if (r >= pi) r = 0.0;
    return r;
}

class EvolutionEngine {
public:
    explicit EvolutionEngine(EngineKind kind, Level level, NormPolicy policy = NormPolicy::reject,
                             std::size_t dense_cap = kDenseCap)
        : kind_(kind), level_(level), policy_(policy) {
        if (kind_ == EngineKind::dense) {
            if (level_.dim() > dense_cap) {
                throw std::length_error("dense engine requires dim <= " +
                                        std::to_string(dense_cap) + ", got " +
                                        std::to_string(level_.dim()));
            }
            eigvecs_ = std::make_shared<const std::vector<double>>(build_eigenvectors(level_));
        }
    }

    EngineKind kind() const { return kind_; }
    const Level& level() const { return level_; }

    StateVector evolve(const StateVector& initial, double t) const {
        if (!(initial.level() == level_)) {
            throw std::invalid_argument("initial state level does not match engine level");
        }
        check_time(t);
        StateVector state = initial;
        if (!state.is_normalized()) {
            if (policy_ == NormPolicy::reject) {
                throw std::invalid_argument("initial state is not normalized");
            }
            state.normalize();
        }
        const double r = reduce_time(t);
        switch (kind_) {
            case EngineKind::spectral: evolve_spectral(state, r); break;
            case EngineKind::product: evolve_product(state, r); break;
            case EngineKind::dense: state = evolve_dense(state, r); break;
        }
        return state;
    }

    // sum_gamma e^{2i(L+1-#gamma)t} |Zhat_gamma><Zhat_gamma|; dense engines only.
    DenseMatrix propagator(double t) const {
        if (kind_ != EngineKind::dense) {
            throw std::logic_error("propagator() requires the dense engine");
        }
        const double r = reduce_time(t);
        const std::size_t n = level_.dim();
        const auto& v = *eigvecs_;
        const std::vector<complex> phase = phase_table(r);
        DenseMatrix u(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                complex acc{};
                for (std::size_t g = 0; g < n; ++g) {
                    acc += phase[std::popcount(g)] * (v[a * n + g] * v[b * n + g]);
                }
                u(a, b) = acc;
            }
        }
        return u;
    }

private:
    // phase[c] = e^{2i(L+1-c)t} for eigenvectors with #sigma = c.
    std::vector<complex> phase_table(double t) const {
        const int n = level_.order();
        std::vector<complex> phase(n + 1);
        for (int c = 0; c <= n; ++c) phase[c] = std::polar(1.0, 2.0 * (n - c) * t);
        return phase;
    }

    void evolve_spectral(StateVector& state, double t) const {
        const std::vector<complex> phase = phase_table(t);
        to_eigenbasis_in_place(state);
        auto x = state.amplitudes();
        for (std::size_t s = 0; s < x.size(); ++s) x[s] *= phase[std::popcount(s)];
        from_eigenbasis_in_place(state);
    }

    void evolve_product(StateVector& state, double t) const {
        const complex global = std::polar(1.0, t);
        const complex c = global * std::cos(t);
        const complex ms = global * complex(0.0, -std::sin(t));
        auto x = state.amplitudes();
        for (int k = 0; k < level_.order(); ++k) {
            const std::size_t bit = std::size_t{1} << k;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (i & bit) continue;
                const complex a = x[i];
                const complex b = x[i | bit];
                x[i] = c * a + ms * b;
                x[i | bit] = c * b + ms * a;
            }
        }
    }

    StateVector evolve_dense(const StateVector& state, double t) const {
        const std::size_t n = level_.dim();
        const auto& v = *eigvecs_;
        const std::vector<complex> phase = phase_table(t);
        std::vector<complex> coeff(n);
        for (std::size_t g = 0; g < n; ++g) {
            const complex a = state[g];
            for (std::size_t s = 0; s < n; ++s) coeff[s] += v[g * n + s] * a;
        }
        for (std::size_t s = 0; s < n; ++s) coeff[s] *= phase[std::popcount(s)];
        StateVector out(level_);
        for (std::size_t g = 0; g < n; ++g) {
            complex acc{};
            for (std::size_t s = 0; s < n; ++s) acc += v[g * n + s] * coeff[s];
            out[g] = acc;
        }
        return out;
    }

    // V[gamma][sigma] = <Z_gamma, Zhat_sigma>
    static std::vector<double> build_eigenvectors(const Level& level) {
        const std::size_t n = level.dim();
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        std::vector<double> v(n * n);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t s = 0; s < n; ++s) {
                v[g * n + s] = scale * kernel_sign(NodeIndex{g}, NodeIndex{s});
            }
        }
        return v;
    }

    EngineKind kind_;
    Level level_;
    NormPolicy policy_;
    std::shared_ptr<const std::vector<double>> eigvecs_;
};

inline StateVector evolve(const EvolutionEngine& engine, const StateVector& initial, double t) {
    return engine.evolve(initial, t);
}

}  // namespace hyperwalk
