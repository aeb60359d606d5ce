// commands.hpp
// Subcommands of the hyperwalk command-line tool. Kept in a header so the
// test suite can drive them in-process.

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperwalk/hyperwalk.hpp"

namespace hyperwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kLevelCapEnv = "HYPERWALK_L_MAX";

// Usage / configuration problems; mapped to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int L = -1;
    std::string engine = "spectral";
    std::string format;
    std::string initial;
    std::optional<double> t;
    std::string t_pi_fraction;
    double tol = 1e-10;
    std::string out_path;
    // subcommand specific
    bool amplitudes = false;
    std::string method;
    std::string from;
};

inline int level_cap_from_env() {
    const char* v = std::getenv(kLevelCapEnv);
    if (v == nullptr || *v == '\0') return kDefaultLevelCap;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(v, &used);
        if (used != std::string(v).size() || cap < 0 || cap > 62) throw std::invalid_argument(v);
        return cap;
    } catch (const std::exception&) {
        throw ConfigError(std::string(kLevelCapEnv) + " must be an integer in [0, 62]");
    }
}

inline Level make_level(int L) {
    const int cap = level_cap_from_env();
    if (L < 0 || L > cap) {
        throw ConfigError("--L must lie in [0, " + std::to_string(cap) + "], got " +
                          std::to_string(L));
    }
    return Level(L, cap);
}

// "p/q" or "p" -> p*pi/q
inline double parse_pi_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        const std::string ps = text.substr(0, slash);
        const long long p = std::stoll(ps, &used);
        if (used != ps.size()) throw std::invalid_argument(text);
        long long q = 1;
        if (slash != std::string::npos) {
            const std::string qs = text.substr(slash + 1);
            q = std::stoll(qs, &used);
            if (used != qs.size()) throw std::invalid_argument(text);
        }
        if (q == 0) throw std::invalid_argument(text);
        return std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    } catch (const std::exception&) {
        throw ConfigError("--t-pi-fraction expects p/q with integers p, q != 0, got '" + text + "'");
    }
}

inline double resolve_time(const RunConfig& c, double fallback) {
    if (c.t && !c.t_pi_fraction.empty()) {
        throw ConfigError("give either a time or --t-pi-fraction, not both");
    }
    if (!c.t_pi_fraction.empty()) return parse_pi_fraction(c.t_pi_fraction);
    const double t = c.t.value_or(fallback);
    if (!std::isfinite(t)) throw ConfigError("time must be finite");
    return t;
}

inline NodeIndex resolve_node(const std::string& text, const Level& level) {
    try {
        return parse_node(text, level);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad node '") + text + "': " + e.what());
    }
}

inline EvolutionEngine make_engine(const RunConfig& c, const Level& level) {
    EngineKind kind;
    try {
        kind = parse_engine(c.engine);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (kind == EngineKind::dense && level.dim() > kDenseCap) {
        throw ConfigError("engine=dense requires L <= 11");
    }
    return EvolutionEngine(kind, level);
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    std::string msg = "unsupported --format '" + format + "'; expected one of:";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw ConfigError(msg);
}

inline std::string cmd_spectrum(const RunConfig& c) {
    const Level level = make_level(c.L);
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format, {"json", "csv"});
    const Spectrum s = spectrum(level);
    return format == "json" ? spectrum_json(s) : spectrum_csv(s);
}

inline std::string cmd_evolve(const RunConfig& c) {
    const Level level = make_level(c.L);
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format, {"json", "csv"});
    const EvolutionEngine engine = make_engine(c, level);
    const StateVector initial = StateVector::basis(level, resolve_node(c.initial, level));
    const double t = resolve_time(c, 0.0);

    const StateVector state = engine.evolve(initial, t);
    Distribution d{level, std::vector<double>(state.dim()), t};
    for (std::size_t s = 0; s < state.dim(); ++s) d.probs[s] = std::norm(state[s]);
    if (std::abs(d.total() - 1.0) > c.tol) {
        throw std::runtime_error("distribution total " + format_real(d.total()) +
                                 " deviates from 1 by more than tol");
    }
    if (format == "csv") {
        if (!c.amplitudes) return probabilities_csv(d.probs);
        std::string out = "node,probability,re,im\n";
        for (std::size_t s = 0; s < state.dim(); ++s) {
            out += "\"" + format_node(NodeIndex{s}) + "\"," + format_real(d.probs[s]) + "," +
                   format_real(state[s].real()) + "," + format_real(state[s].imag()) + "\n";
        }
        return out;
    }
    return distribution_json(d, c.amplitudes ? std::optional<StateVector>(state) : std::nullopt);
}

inline std::string cmd_time_average(const RunConfig& c) {
    const Level level = make_level(c.L);
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format, {"json", "csv"});
    const NodeIndex start = resolve_node(c.initial, level);
    const StateVector initial = StateVector::basis(level, start);

    TimeAverageMethod method;
    try {
        method = c.method.empty() ? (start.bits == 0 ? TimeAverageMethod::krawtchouk
                                                     : TimeAverageMethod::quadrature)
                                  : parse_time_average_method(c.method);
        parse_engine(c.engine);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (method == TimeAverageMethod::pair_sum && level.L() > kPairSumMaxLevel) {
        throw ConfigError("pair-sum method is limited to L <= " + std::to_string(kPairSumMaxLevel));
    }
    if (method != TimeAverageMethod::quadrature && start.bits != 0) {
        throw ConfigError(std::string(to_string(method)) + " method requires the vacuum start");
    }
    if (method == TimeAverageMethod::quadrature) make_engine(c, level);

    const TimeAverageDistribution d = time_average(initial, method, parse_engine(c.engine));
    if (std::abs(d.total() - 1.0) > c.tol) {
        throw std::runtime_error("time average total deviates from 1 by more than tol");
    }
    const SymmetryReport sym = is_symmetric(d, c.tol);
    return format == "json" ? time_average_json(d, sym) : probabilities_csv(d.probs);
}

inline std::string cmd_pst(const RunConfig& c) {
    const Level level = make_level(c.L);
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format, {"json", "csv"});
    const EvolutionEngine engine = make_engine(c, level);
    const NodeIndex from = resolve_node(c.from, level);
    const double t0 = resolve_time(c, std::numbers::pi / 2);

    const std::vector<double> f = pst_fidelities(from, t0, engine);
    const auto best = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
    double sum_sq = 0.0;
    for (double x : f) sum_sq += x * x;

    if (format == "csv") {
        std::string out = "node,fidelity\n";
        for (std::size_t s = 0; s < f.size(); ++s) {
            out += "\"" + format_node(NodeIndex{s}) + "\"," + format_real(f[s]) + "\n";
        }
        return out;
    }
    std::string out = "{\"schema\":\"" + std::string(kSchema) + "\",\"L\":" +
                      std::to_string(level.L()) + ",\"from\":\"" + format_node(from) +
                      "\",\"t0\":" + format_real(t0) + ",\"target\":\"" +
                      format_node(NodeIndex{best}) + "\",\"fidelity\":" + format_real(f[best]) +
                      ",\"sum_squares\":" + format_real(sum_sq) + ",\"table\":[";
    bool first = true;
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (f[s] <= c.tol) continue;
        if (!first) out += ',';
        first = false;
        out += "{\"node\":\"" + format_node(NodeIndex{s}) + "\",\"fidelity\":" + format_real(f[s]) + "}";
    }
    return out + "]}\n";
}

inline std::string cmd_graph(const RunConfig& c) {
    const Level level = make_level(c.L);
    GraphFormat format;
    try {
        format = parse_graph_format(c.format.empty() ? "dot" : c.format);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (level.dim() > kGraphExportCap) {
        throw ConfigError("graph export is limited to " + std::to_string(kGraphExportCap) +
                          " vertices (L <= 11)");
    }
    return export_graph(level, format);
}

// Parses argv-style arguments (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continuous-time quantum walk on the hypercube of subsets of {0,...,L}",
                 "hyperwalk"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--L", c.L, "walk order L (dimension 2^(L+1))")->required();
        sub->add_option("--out", c.out_path, "write output to FILE instead of stdout");
        sub->add_option("--tol", c.tol, "numerical tolerance")->capture_default_str();
    };
    auto add_walk = [&](CLI::App* sub) {
        sub->add_option("--engine", c.engine, "spectral | product | dense")->capture_default_str();
        sub->add_option("--initial", c.initial, "initial node, e.g. \"0,2\" (default: empty set)");
        sub->add_option("--t-pi-fraction", c.t_pi_fraction, "time as an exact fraction p/q of pi");
    };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
    add_common(spectrum_cmd);
    spectrum_cmd->add_option("--format", c.format, "json | csv");

    auto* evolve_cmd = app.add_subcommand("evolve", "distribution (and amplitudes) at time t");
    add_common(evolve_cmd);
    add_walk(evolve_cmd);
    evolve_cmd->add_option("--t", c.t, "time");
    evolve_cmd->add_option("--format", c.format, "json | csv");
    evolve_cmd->add_flag("--amplitudes", c.amplitudes, "also emit [re,im] amplitudes");

    auto* avg_cmd = app.add_subcommand("time-average", "time-average distribution over one period");
    add_common(avg_cmd);
    add_walk(avg_cmd);
    avg_cmd->add_option("--method", c.method, "quadrature | pair-sum | krawtchouk");
    avg_cmd->add_option("--format", c.format, "json | csv");

    auto* pst_cmd = app.add_subcommand("pst", "transfer fidelities from one node at time t0");
    add_common(pst_cmd);
    add_walk(pst_cmd);
    pst_cmd->add_option("--from", c.from, "source node (default: empty set)");
    pst_cmd->add_option("--t0", c.t, "time (default pi/2)");
    pst_cmd->add_option("--format", c.format, "json | csv");

    auto* graph_cmd = app.add_subcommand("graph", "export the hypercube graph");
    add_common(graph_cmd);
    graph_cmd->add_option("--format", c.format, "dot | json | edge-list");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::string text;
        if (*spectrum_cmd) text = cmd_spectrum(c);
        else if (*evolve_cmd) text = cmd_evolve(c);
        else if (*avg_cmd) text = cmd_time_average(c);
        else if (*pst_cmd) text = cmd_pst(c);
        else if (*graph_cmd) text = cmd_graph(c);

        if (c.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(c.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
            f << text;
            if (!f) throw std::runtime_error("failed writing " + c.out_path);
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace hyperwalk::cli
