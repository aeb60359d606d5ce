// graph.hpp
// The graph on subsets of {0,...,L} with sigma ~ tau iff #(sigma xor tau) = 1
// (the (L+1)-dimensional hypercube), its combinatorial Laplacian, and exports.
// The graph is never stored; edges come from the adjacency predicate.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperwalk/operators.hpp"
#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"

namespace hyperwalk {

inline constexpr std::size_t kGraphExportCap = 4096;

inline bool is_adjacent(NodeIndex a, NodeIndex b) {
    return cardinality(symmetric_difference(a, b)) == 1;
}

inline bool is_adjacent(const Level& level, NodeIndex a, NodeIndex b) {
    return is_adjacent(level.check(a), level.check(b));
}

// {sigma \ k : k in sigma} u {sigma u k : k not in sigma}, ascending.
inline std::vector<NodeIndex> neighborhood(NodeIndex sigma, const Level& level) {
    level.check(sigma);
    std::vector<NodeIndex> out;
    out.reserve(level.order());
    for (int k = 0; k < level.order(); ++k) {
        out.push_back(sigma.contains(k) ? set_difference(sigma, singleton(k))
                                        : NodeIndex{sigma.bits | singleton(k).bits});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t degree(NodeIndex sigma, const Level& level) {
    return neighborhood(sigma, level).size();
}

inline std::size_t edge_count(const Level& level) {
    return level.dim() * static_cast<std::size_t>(level.order()) / 2;
}

// [Lf](sigma) = sum_{tau ~ sigma} (f(sigma) - f(tau))
inline StateVector graph_laplacian_apply(const StateVector& f) {
    const Level& level = f.level();
    StateVector out(level);
    for (std::size_t s = 0; s < f.dim(); ++s) {
        complex acc{};
        for (NodeIndex t : neighborhood(NodeIndex{s}, level)) acc += f[s] - f[t.bits];
        out[s] = acc;
    }
    return out;
}

// Integer Laplacian matrix built from the adjacency predicate.
inline std::vector<std::int64_t> graph_laplacian_matrix(const Level& level,
                                                        std::size_t cap = kDenseCap) {
    if (level.dim() > cap) throw std::length_error("graph too large for a dense matrix");
    const std::size_t n = level.dim();
    std::vector<std::int64_t> m(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                m[a * n + b] = static_cast<std::int64_t>(degree(NodeIndex{a}, level));
            } else if (is_adjacent(NodeIndex{a}, NodeIndex{b})) {
                m[a * n + b] = -1;
            }
        }
    }
    return m;
}

// The unitary F: C(graph) -> state space with F e_sigma = Z_sigma. Both sides
// share the bitmask indexing, so F acts as the identity on coordinates.
enum class FDirection { to_h, to_C };

inline StateVector unitary_F(FDirection, const StateVector& v) { return v; }

enum class GraphFormat { dot, json, edge_list };

inline GraphFormat parse_graph_format(std::string_view s) {
    if (s == "dot") return GraphFormat::dot;
    if (s == "json") return GraphFormat::json;
    if (s == "edge-list" || s == "edge_list") return GraphFormat::edge_list;
    throw std::invalid_argument("unknown graph format '" + std::string(s) + "'");
}

template <typename Fn>
void for_each_edge(const Level& level, Fn&& fn) {
    for (std::size_t a = 0; a < level.dim(); ++a) {
        for (int k = 0; k < level.order(); ++k) {
            const std::size_t b = a ^ (std::size_t{1} << k);
            if (a < b) fn(NodeIndex{a}, NodeIndex{b});
        }
    }
}

// Edges ordered by smaller endpoint, then larger endpoint.
inline std::vector<std::pair<NodeIndex, NodeIndex>> edges(const Level& level) {
    std::vector<std::pair<NodeIndex, NodeIndex>> out;
    out.reserve(edge_count(level));
    for_each_edge(level, [&](NodeIndex a, NodeIndex b) { out.emplace_back(a, b); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string export_graph(const Level& level, GraphFormat format,
                                std::size_t cap = kGraphExportCap) {
    if (level.dim() > cap) {
        throw std::length_error("graph with " + std::to_string(level.dim()) +
                                " vertices exceeds export cap " + std::to_string(cap));
    }
    const auto es = edges(level);
    std::string out;
    switch (format) {
        case GraphFormat::dot:
            out += "graph hypercube_L" + std::to_string(level.L()) + " {\n";
            for (std::size_t v = 0; v < level.dim(); ++v) {
                out += "  " + std::to_string(v) + " [label=\"" + format_node(NodeIndex{v}) + "\"];\n";
            }
            for (const auto& [a, b] : es) {
                out += "  " + std::to_string(a.bits) + " -- " + std::to_string(b.bits) + ";\n";
            }
            out += "}\n";
            break;
        case GraphFormat::edge_list:
            for (const auto& [a, b] : es) out += format_node(a) + " " + format_node(b) + "\n";
            break;
        case GraphFormat::json:
            out += "{\"schema\":\"hyperwalk/1\",\"L\":" + std::to_string(level.L()) +
                   ",\"vertices\":" + std::to_string(level.dim()) + ",\"edges\":[";
            for (std::size_t i = 0; i < es.size(); ++i) {
                if (i) out += ',';
                out += "[" + std::to_string(es[i].first.bits) + "," +
                       std::to_string(es[i].second.bits) + "]";
            }
            out += "]}\n";
            break;
    }
    return out;
}

}  // namespace hyperwalk
