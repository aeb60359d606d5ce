// subset.hpp
// Subsets of {0,...,L} encoded as little-endian bitmasks: element k <-> bit k.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperwalk {

inline constexpr int kDefaultLevelCap = 24;

// A subset of {0,...,L}. The integer value of the mask is also the index of
// the canonical basis vector Z_sigma and of the graph vertex sigma.
struct NodeIndex {
    std::uint64_t bits = 0;

    constexpr NodeIndex() = default;
    constexpr explicit NodeIndex(std::uint64_t b) : bits(b) {}

    friend constexpr bool operator==(NodeIndex, NodeIndex) = default;
    friend constexpr auto operator<=>(NodeIndex, NodeIndex) = default;

    constexpr bool contains(int k) const { return (bits >> k) & 1U; }
};

// The walk order L. dim = 2^(L+1) basis vectors / vertices.
class Level {
public:
    explicit Level(int L, int cap = kDefaultLevelCap) : L_(L) {
        if (cap < 0 || cap > 62) {
            throw std::invalid_argument("level cap must lie in [0, 62]");
        }
        if (L < 0 || L > cap) {
            throw std::out_of_range("level L=" + std::to_string(L) + " outside [0, " +
                                    std::to_string(cap) + "]");
        }
    }

    int L() const { return L_; }
    // Number of elements of {0,...,L}.
    int order() const { return L_ + 1; }
    std::size_t dim() const { return std::size_t{1} << (L_ + 1); }
    NodeIndex full() const { return NodeIndex{(std::uint64_t{1} << (L_ + 1)) - 1}; }

    bool contains(NodeIndex s) const { return s.bits < dim(); }

    NodeIndex check(NodeIndex s) const {
        if (!contains(s)) {
            throw std::out_of_range("node mask " + std::to_string(s.bits) +
                                    " outside level L=" + std::to_string(L_));
        }
        return s;
    }

    friend bool operator==(const Level&, const Level&) = default;

private:
    int L_;
};

inline constexpr int cardinality(NodeIndex s) { return std::popcount(s.bits); }

inline constexpr NodeIndex symmetric_difference(NodeIndex a, NodeIndex b) {
    return NodeIndex{a.bits ^ b.bits};
}

// Range-checked variant; nodes carry no level of their own, so a "mismatch"
// means one of them falls outside the given level.
inline NodeIndex symmetric_difference(const Level& level, NodeIndex a, NodeIndex b) {
    return symmetric_difference(level.check(a), level.check(b));
}

inline NodeIndex set_difference(NodeIndex a, NodeIndex b) { return NodeIndex{a.bits & ~b.bits}; }

inline NodeIndex complement(NodeIndex s, const Level& level) {
    return NodeIndex{level.full().bits ^ level.check(s).bits};
}

inline NodeIndex singleton(int k) { return NodeIndex{std::uint64_t{1} << k}; }

// Canonical string form: ascending elements, comma separated, braces; "{}" for the empty set.
inline std::string format_node(NodeIndex s) {
    std::string out = "{";
    bool first = true;
    for (int k = 0; k < 64; ++k) {
        if (!s.contains(k)) continue;
        if (!first) out += ',';
        out += std::to_string(k);
        first = false;
    }
    out += '}';
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Accepts "", "∅", "{}", or comma separated distinct integers in [0, L],
// optionally wrapped in braces (so format_node output parses back).
inline NodeIndex parse_node(std::string_view text, const Level& level) {
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        s = detail::trim(s.substr(1, s.size() - 2));
    }
    if (s.empty() || s == "∅") return NodeIndex{};

    NodeIndex out;
    while (true) {
        auto comma = s.find(',');
        std::string_view tok = detail::trim(s.substr(0, comma));
        if (tok.empty()) throw std::invalid_argument("malformed node string: empty element");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed node element '" + std::string(tok) + "'");
            }
            value = value * 10 + (c - '0');
            if (value > level.L()) {
                throw std::out_of_range("node element " + std::string(tok) + " exceeds L=" +
                                        std::to_string(level.L()));
            }
        }
        if (out.contains(value)) {
            throw std::invalid_argument("duplicate node element " + std::to_string(value));
        }
        out.bits |= std::uint64_t{1} << value;
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

// All nodes of the level, ascending.
inline std::vector<NodeIndex> all_nodes(const Level& level) {
    std::vector<NodeIndex> out(level.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = NodeIndex{i};
    return out;
}

}  // namespace hyperwalk
