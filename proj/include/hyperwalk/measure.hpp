// measure.hpp
// Node probability distributions of the walk, time averages, the complement
// symmetry check and perfect-state-transfer fidelities.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/combinatorics.hpp"
#include "hyperwalk/evolution.hpp"
#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"

namespace hyperwalk {

inline constexpr int kPairSumMaxLevel = 7;
inline constexpr int kVacuumValueMaxLevel = 30;

struct Distribution {
    Level level;
    std::vector<double> probs;
    std::optional<double> time;

    double total() const {
        double acc = 0.0;
        for (double p : probs) acc += p;
        return acc;
    }
    double at(NodeIndex s) const { return probs[level.check(s).bits]; }
};

enum class TimeAverageMethod { quadrature, pair_sum, krawtchouk };

inline std::string_view to_string(TimeAverageMethod m) {
    switch (m) {
        case TimeAverageMethod::quadrature: return "quadrature";
        case TimeAverageMethod::pair_sum: return "pair-sum";
        case TimeAverageMethod::krawtchouk: return "krawtchouk";
    }
    return "?";
}

inline TimeAverageMethod parse_time_average_method(std::string_view s) {
    if (s == "quadrature") return TimeAverageMethod::quadrature;
    if (s == "pair-sum" || s == "pair_sum") return TimeAverageMethod::pair_sum;
    if (s == "krawtchouk") return TimeAverageMethod::krawtchouk;
    throw std::invalid_argument("unknown time-average method '" + std::string(s) + "'");
}

struct TimeAverageDistribution {
    Level level;
    std::vector<double> probs;
    TimeAverageMethod method;

    double total() const {
        double acc = 0.0;
        for (double p : probs) acc += p;
        return acc;
    }
    double at(NodeIndex s) const { return probs[level.check(s).bits]; }
};

// P_t(sigma) = |<Z_sigma, xi_t>|^2
inline Distribution distribution_at(const EvolutionEngine& engine, const StateVector& initial,
                                    double t) {
    const StateVector state = engine.evolve(initial, t);
    Distribution d{state.level(), std::vector<double>(state.dim()), t};
    for (std::size_t s = 0; s < state.dim(); ++s) d.probs[s] = std::norm(state[s]);
    return d;
}

// A[k] = sum_{#gamma = k} (-1)^{#(sigma \ gamma)} for any sigma with #sigma = card,
// k = 0..order. Grouping by j = #(sigma & gamma) gives the binomial convolution
// sum_j (-1)^{card-j} C(card, j) C(order-card, k-j).
inline std::vector<std::int64_t> krawtchouk_sums(int card, int order) {
    if (card < 0 || card > order) throw std::out_of_range("cardinality outside [0, order]");
    std::vector<std::int64_t> a(order + 1);
    for (int k = 0; k <= order; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j <= std::min(card, k); ++j) {
            const auto term = static_cast<std::int64_t>(binomial(card, j) *
                                                        binomial(order - card, k - j));
            acc += ((card - j) & 1) ? -term : term;
        }
        a[k] = acc;
    }
    return a;
}

// Vacuum-start P_t(sigma) evaluated from the closed form
// 4^{-(L+1)} |sum_gamma (-1)^{#(sigma \ gamma)} e^{2i(L+1-#gamma)t}|^2, grouped by #gamma.
inline double closed_form_pt(NodeIndex sigma, double t, const Level& level) {
    check_time(t);
    const int n = level.order();
    const auto a = krawtchouk_sums(cardinality(level.check(sigma)), n);
    const double r = reduce_time(t);
    complex acc{};
    for (int k = 0; k <= n; ++k) acc += static_cast<double>(a[k]) * std::polar(1.0, 2.0 * (n - k) * r);
    return std::norm(acc) / (static_cast<double>(level.dim()) * static_cast<double>(level.dim()));
}

// Number of equispaced nodes that average P_t exactly over one period: P_t is a
// trigonometric polynomial in e^{2imt}, |m| <= L+1, and M >= 2L+3 points kill
// every nonzero frequency.
inline int quadrature_points(const Level& level) { return 2 * level.L() + 4; }

inline bool is_vacuum(const StateVector& s, double tol = kNormTolerance) {
    if (std::abs(std::norm(s[0]) - 1.0) > tol) return false;
    for (std::size_t i = 1; i < s.dim(); ++i) {
        if (std::norm(s[i]) > tol) return false;
    }
    return true;
}

namespace detail {

inline TimeAverageDistribution average_by_quadrature(const StateVector& initial,
                                                     EngineKind engine_kind) {
    const Level& level = initial.level();
    const EvolutionEngine engine(engine_kind, level);
    const int m = quadrature_points(level);
    TimeAverageDistribution out{level, std::vector<double>(level.dim()),
                                TimeAverageMethod::quadrature};
    for (int j = 0; j < m; ++j) {
        const StateVector state = engine.evolve(initial, j * std::numbers::pi / m);
        for (std::size_t s = 0; s < state.dim(); ++s) out.probs[s] += std::norm(state[s]);
    }
    for (double& p : out.probs) p /= m;
    return out;
}

// The double sum over pairs of equal cardinality, taken literally. O(dim^3).
inline TimeAverageDistribution average_by_pair_sum(const Level& level) {
    if (level.L() > kPairSumMaxLevel) {
        throw std::out_of_range("pair-sum time average is limited to L <= " +
                                std::to_string(kPairSumMaxLevel));
    }
    const std::size_t n = level.dim();
    TimeAverageDistribution out{level, std::vector<double>(n), TimeAverageMethod::pair_sum};
    for (std::size_t s = 0; s < n; ++s) {
        std::int64_t acc = 0;
        for (std::size_t g1 = 0; g1 < n; ++g1) {
            for (std::size_t g2 = 0; g2 < n; ++g2) {
                if (std::popcount(g1) != std::popcount(g2)) continue;
                const int e = std::popcount(s & ~g1) + std::popcount(s & ~g2);
                acc += (e & 1) ? -1 : 1;
            }
        }
        out.probs[s] = static_cast<double>(acc) / (static_cast<double>(n) * static_cast<double>(n));
    }
    return out;
}

// P(sigma) = dim^{-2} sum_k A_{#sigma}[k]^2; depends on #sigma only.
inline TimeAverageDistribution average_by_krawtchouk(const Level& level) {
    const int order = level.order();
    const double norm = static_cast<double>(level.dim()) * static_cast<double>(level.dim());
    std::vector<double> by_card(order + 1);
    for (int c = 0; c <= order; ++c) {
        double acc = 0.0;
        for (std::int64_t a : krawtchouk_sums(c, order)) acc += static_cast<double>(a) * static_cast<double>(a);
        by_card[c] = acc / norm;
    }
    TimeAverageDistribution out{level, std::vector<double>(level.dim()),
                                TimeAverageMethod::krawtchouk};
    for (std::size_t s = 0; s < out.probs.size(); ++s) out.probs[s] = by_card[std::popcount(s)];
    return out;
}

}  // namespace detail

// (1/pi) int_0^pi P_t(sigma) dt. pair_sum and krawtchouk require the vacuum start.
inline TimeAverageDistribution time_average(const StateVector& initial, TimeAverageMethod method,
                                            EngineKind engine = EngineKind::spectral) {
    if (method != TimeAverageMethod::quadrature && !is_vacuum(initial)) {
        throw std::invalid_argument(std::string(to_string(method)) +
                                    " time average requires the vacuum initial state");
    }
    switch (method) {
        case TimeAverageMethod::quadrature: return detail::average_by_quadrature(initial, engine);
        case TimeAverageMethod::pair_sum: return detail::average_by_pair_sum(initial.level());
        case TimeAverageMethod::krawtchouk: return detail::average_by_krawtchouk(initial.level());
    }
    throw std::logic_error("unknown time-average method");
}

// Vacuum-start time average at {} and at the full set: (2L+1)!!/(2L+2)!!,
// computed as C(2L+2, L+1) / 4^(L+1) and reduced.
inline Rational vacuum_average_value(const Level& level) {
    const int n = level.order();
    if (level.L() > kVacuumValueMaxLevel) {
        throw std::overflow_error("vacuum average value is exact only for L <= " +
                                  std::to_string(kVacuumValueMaxLevel));
    }
    return Rational::reduced(binomial(2 * n, n), std::uint64_t{1} << (2 * n));
}

struct SymmetryReport {
    bool symmetric = true;
    double max_deviation = 0.0;
    NodeIndex witness{};  // sigma attaining max |P(sigma) - P(sigma^c)|
};

inline SymmetryReport complement_symmetry(std::span<const double> probs, const Level& level,
                                          double tol) {
    if (probs.size() != level.dim()) throw std::invalid_argument("distribution size mismatch");
    SymmetryReport r;
    const std::uint64_t full = level.full().bits;
    for (std::size_t s = 0; s < probs.size(); ++s) {
        const double dev = std::abs(probs[s] - probs[s ^ full]);
        if (dev > r.max_deviation) {
            r.max_deviation = dev;
            r.witness = NodeIndex{s};
        }
    }
    r.symmetric = r.max_deviation <= tol;
    return r;
}

inline SymmetryReport is_symmetric(const TimeAverageDistribution& dist, double tol) {
    return complement_symmetry(dist.probs, dist.level, tol);
}

// |<e^{i t0 Delta} Z_sigma, Z_tau>| for every tau at once.
inline std::vector<double> pst_fidelities(NodeIndex sigma, double t0,
                                          const EvolutionEngine& engine) {
    const StateVector out = engine.evolve(StateVector::basis(engine.level(), sigma), t0);
    std::vector<double> f(out.dim());
    for (std::size_t s = 0; s < out.dim(); ++s) f[s] = std::abs(out[s]);
    return f;
}

inline double pst_check(NodeIndex sigma, NodeIndex tau, double t0, const EvolutionEngine& engine) {
    engine.level().check(tau);
    const StateVector out = engine.evolve(StateVector::basis(engine.level(), sigma), t0);
    return std::abs(inner_product(out, StateVector::basis(engine.level(), tau)));
}

}  // namespace hyperwalk
