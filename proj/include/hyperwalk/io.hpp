// io.hpp
// Deterministic text output: JSON (schema "hyperwalk/1") and CSV.
// Reals are printed with 17 significant digits, scientific below 1e-4.

#pragma once

#include <charconv>
#include <optional>
#include <span>
#include <string>

#include "hyperwalk/measure.hpp"
#include "hyperwalk/operators.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/state.hpp"

namespace hyperwalk {

inline constexpr const char* kSchema = "hyperwalk/1";

inline std::string format_real(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::abs(x) < 1e-4
                         ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16)
                         : std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string format_complex_pair(complex z) {
    return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
}

namespace detail {

inline std::string real_array(std::span<const double> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_real(xs[i]);
    }
    return out + "]";
}

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

inline std::string spectrum_json(const Spectrum& s) {
    std::string out = "{\"schema\":\"" + std::string(kSchema) + "\",\"L\":" +
                      std::to_string(s.level.L()) + ",\"entries\":[";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        if (i) out += ',';
        out += "{\"eigenvalue\":" + std::to_string(e.eigenvalue) +
               ",\"multiplicity\":" + std::to_string(e.multiplicity) +
               ",\"card\":" + std::to_string(e.card) + "}";
    }
    return out + "]}\n";
}

inline std::string spectrum_csv(const Spectrum& s) {
    std::string out = "eigenvalue,multiplicity,card\n";
    for (const auto& e : s.entries) {
        out += std::to_string(e.eigenvalue) + "," + std::to_string(e.multiplicity) + "," +
               std::to_string(e.card) + "\n";
    }
    return out;
}

// node,probability rows in ascending bitmask order.
inline std::string probabilities_csv(std::span<const double> probs) {
    std::string out = "node,probability\n";
    for (std::size_t s = 0; s < probs.size(); ++s) {
        out += detail::quoted(format_node(NodeIndex{s})) + "," + format_real(probs[s]) + "\n";
    }
    return out;
}

inline std::string distribution_json(const Distribution& d,
                                     const std::optional<StateVector>& amplitudes = std::nullopt) {
    std::string out = "{\"schema\":\"" + std::string(kSchema) + "\",\"L\":" +
                      std::to_string(d.level.L()) + ",\"t\":" +
                      (d.time ? format_real(*d.time) : std::string("null")) +
                      ",\"total\":" + format_real(d.total()) +
                      ",\"probs\":" + detail::real_array(d.probs);
    if (amplitudes) {
        out += ",\"amplitudes\":[";
        for (std::size_t i = 0; i < amplitudes->dim(); ++i) {
            if (i) out += ',';
            out += format_complex_pair((*amplitudes)[i]);
        }
        out += "]";
    }
    return out + "}\n";
}

inline std::string time_average_json(const TimeAverageDistribution& d,
                                     const SymmetryReport& symmetry) {
    return "{\"schema\":\"" + std::string(kSchema) + "\",\"L\":" + std::to_string(d.level.L()) +
           ",\"method\":\"" + std::string(to_string(d.method)) + "\",\"total\":" +
           format_real(d.total()) + ",\"symmetry\":{\"max_deviation\":" +
           format_real(symmetry.max_deviation) + ",\"witness\":" +
           detail::quoted(format_node(symmetry.witness)) + "},\"probs\":" +
           detail::real_array(d.probs) + "}\n";
}

// Row-major [[ [re,im], ... ], ...].
inline std::string matrix_json(const DenseMatrix& m) {
    std::string out = "{\"schema\":\"" + std::string(kSchema) + "\",\"dim\":" +
                      std::to_string(m.dim) + ",\"data\":[";
    for (std::size_t r = 0; r < m.dim; ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < m.dim; ++c) {
            if (c) out += ',';
            out += format_complex_pair(m(r, c));
        }
        out += ']';
    }
    return out + "]}\n";
}

}  // namespace hyperwalk
