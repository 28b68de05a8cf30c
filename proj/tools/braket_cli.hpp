#pragma once

// Command-line front end: `braket dj ...` and `braket state ...`.
//
// Exit codes: 0 success, 2 usage/parse/dimension error, 3 Deutsch-Jozsa
// promise violation, 1 anything unexpected.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braket/braket.hpp"

namespace braket::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPromise = 3;

using nlohmann::json;

struct RunConfig {
    unsigned n = 0;
    std::string oracle;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10;  // k for the probabilistic classical baseline
    std::string format = "text";

    std::string expression;
    std::string file;
    std::optional<unsigned> qubits;
    std::vector<std::string> apply;
    bool measure = false;
    bool separable = false;
    std::string labels = "binary";
};

namespace detail {

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline json to_json(const OutcomeDistribution& dist) {
    json out = json::object();
    for (const auto& [key, p] : dist.probabilities()) out[key] = p;
    return out;
}

inline json to_json(const MeasurementRecord& record) {
    json counts = json::object();
    for (const auto& [key, c] : record.counts) counts[key] = c;
    return {{"shots", record.shots}, {"seed", record.seed}, {"counts", counts}};
}

// Prints a flat JSON object as "key: value" lines; nested objects indent.
inline void print_text(std::ostream& out, const json& obj, const std::string& indent = "") {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_text(out, value, indent + "  ");
        } else if (value.is_array()) {
            out << indent << key << ":";
            for (const auto& v : value) out << ' ' << (v.is_number() ? num(v.get<double>()) : v.dump());
            out << '\n';
        } else if (value.is_number_float()) {
            out << indent << key << ": " << num(value.get<double>()) << '\n';
        } else if (value.is_string()) {
            out << indent << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << indent << key << ": " << value.dump() << '\n';
        }
    }
}

inline void emit(std::ostream& out, const json& report, const std::string& format) {
    if (format == "json") {
        out << report.dump() << '\n';
    } else {
        print_text(out, report);
    }
}

// A gate token is name[@q[,q...]]. In a comma-separated list, bare integers
// continue the qubit list of the previous token: "h@0,cnot@0,1".
inline std::vector<std::string> split_gate_list(const std::vector<std::string>& values) {
    std::vector<std::string> tokens;
    for (const auto& value : values) {
        std::stringstream ss(value);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) throw invalid_input("empty gate in list \"" + value + "\"");
            const bool numeric = piece.find_first_not_of("0123456789") == std::string::npos;
            if (numeric) {
                if (tokens.empty() || tokens.back().find('@') == std::string::npos) {
                    throw invalid_input("stray qubit index \"" + piece + "\" in gate list");
                }
                tokens.back() += "," + piece;
            } else {
                tokens.push_back(piece);
            }
        }
    }
    return tokens;
}

inline unsigned parse_qubit(const std::string& text, const std::string& token) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4) {
        throw invalid_input("bad qubit index in gate \"" + token + "\"");
    }
    return static_cast<unsigned>(std::stoul(text));
}

// Operators to apply, in order, for one gate token on an n-qubit register.
inline std::vector<Operator> gate_operators(const std::string& token, unsigned n) {
    const auto at = token.find('@');
    const std::string name = token.substr(0, at);
    std::vector<unsigned> targets;
    if (at != std::string::npos) {
        std::stringstream ss(token.substr(at + 1));
        std::string q;
        while (std::getline(ss, q, ',')) targets.push_back(parse_qubit(q, token));
        if (targets.empty()) throw invalid_input("gate \"" + token + "\" has no qubit index");
    }

    auto single = [&]() -> Operator {
        if (name == "i") return identity(1);
        if (name == "x") return pauli_x();
        return hadamard();
    };

    if (name == "i" || name == "x" || name == "h") {
        if (!targets.empty()) {
            if (targets.size() != 1) throw invalid_input("gate \"" + token + "\" takes one qubit");
            if (targets[0] >= n) {
                throw dimension_mismatch("gate \"" + token + "\" targets qubit " + std::to_string(targets[0]) +
                                         " of a " + std::to_string(n) + "-qubit state");
            }
            return {on_qubits(single(), targets[0], n)};
        }
        if (name == "i") return {identity(n)};
        if (name == "h" && n <= kDirectHadamardQubits) return {hadamard_n(n)};
        std::vector<Operator> layer;
        for (unsigned q = 0; q < n; ++q) layer.push_back(on_qubits(single(), q, n));
        return layer;
    }
    if (name == "cnot") {
        if (targets.empty()) {
            if (n != 2) throw dimension_mismatch("bare cnot needs a 2-qubit state, got " + std::to_string(n));
            return {cnot()};
        }
        if (targets.size() != 2 || targets[1] != targets[0] + 1) {
            throw invalid_input("gate \"" + token + "\": cnot takes adjacent qubits control,control+1");
        }
        if (targets[1] >= n) {
            throw dimension_mismatch("gate \"" + token + "\" does not fit a " + std::to_string(n) + "-qubit state");
        }
        return {on_qubits(cnot(), targets[0], n)};
    }
    throw invalid_input("unknown gate \"" + name + "\" (expected i, x, h or cnot)");
}

inline json process_state(QuantumState state, const RunConfig& cfg) {
    json report = json::object();
    json factors = json::array();
    for (const auto& token : split_gate_list(cfg.apply)) {
        for (const auto& op : gate_operators(token, state.qubits())) {
            ApplyReport step = apply(op, state);
            factors.push_back(step.normalization_factor);
            state = std::move(step.output);
        }
    }
    const LabelMode mode = cfg.labels == "decimal" ? LabelMode::decimal : LabelMode::binary;
    report["qubits"] = state.qubits();
    report["state"] = format_state(state, mode);
    if (!cfg.apply.empty()) report["normalization_factors"] = factors;
    if (cfg.measure || cfg.shots > 0) {
        const OutcomeDistribution dist = probabilities(state);
        if (cfg.measure) report["distribution"] = to_json(dist);
        if (cfg.shots > 0) {
            report["histogram"] = to_json(sample(dist, cfg.shots, cfg.seed));
            report["rng"] = braket::detail::kEngineName;
        }
    }
    if (cfg.separable) {
        const FactorizationResult fr = is_product_state(state);
        json sep = {{"is_product", fr.is_product}, {"residual", fr.residual}};
        if (fr.factors) {
            json fs = json::array();
            for (const auto& f : *fr.factors) fs.push_back(format_state(f));
            sep["factors"] = fs;
        }
        report["separable"] = sep;
    }
    return report;
}

inline int cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.file.empty() == cfg.expression.empty()) {
        err << "state: give exactly one of an expression or --file\n";
        return kExitUsage;
    }
    if (cfg.expression.empty()) {
        std::ifstream in(cfg.file);
        if (!in) {
            err << "state: cannot open " << cfg.file << '\n';
            return kExitUsage;
        }
        json results = json::array();
        for (auto& entry : read_fixture(in, cfg.qubits)) {
            json r = process_state(std::move(entry.state), cfg);
            r["line"] = entry.line;
            r["input"] = entry.text;
            results.push_back(std::move(r));
        }
        if (cfg.format == "json") {
            out << results.dump() << '\n';
        } else {
            for (const auto& r : results) {
                detail::print_text(out, r);
                out << '\n';
            }
        }
        return kExitOk;
    }
    emit(out, process_state(parse_state(cfg.expression, cfg.qubits), cfg), cfg.format);
    return kExitOk;
}

inline int cmd_dj(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BooleanOracle oracle = parse_oracle_spec(cfg.oracle, cfg.n);
    const DJResult result = deutsch_jozsa(oracle);

    BooleanOracle det_copy = oracle;
    const ClassicalOutcome det = classify_classical_deterministic(det_copy);
    BooleanOracle prob_copy = oracle;
    const ClassicalOutcome prob = classify_classical_probabilistic(prob_copy, cfg.samples, cfg.seed);

    json report = {
        {"n", cfg.n},
        {"oracle", cfg.oracle},
        {"oracle_kind", to_string(oracle.kind())},
        {"verdict", to_string(result.verdict)},
        {"p_zero", result.p_zero},
        {"oracle_applications", result.oracle_applications},
        {"gate_layers", result.gate_layers},
        {"promise_violated", result.promise_violated},
        {"distribution", to_json(result.distribution)},
        {"classical_deterministic_verdict", to_string(det.verdict)},
        {"classical_deterministic_queries", det.queries},
        {"classical_probabilistic_verdict", to_string(prob.verdict)},
        {"classical_probabilistic_queries", prob.queries},
        {"classical_probabilistic_samples", cfg.samples},
        {"classical_probabilistic_error_bound", prob.error_bound},
    };
    if (cfg.shots > 0) {
        report["histogram"] = to_json(sample(result.distribution, cfg.shots, cfg.seed));
        report["rng"] = braket::detail::kEngineName;
    }
    emit(out, report, cfg.format);
    if (result.promise_violated) {
        err << "warning: oracle is neither constant nor balanced; p_zero = " << num(result.p_zero) << '\n';
        return kExitPromise;
    }
    return kExitOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Statevector simulator in bra-ket notation with a Deutsch-Jozsa demo", "braket"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* dj = app.add_subcommand("dj", "Run Deutsch-Jozsa and the classical baselines on one oracle");
    dj->add_option("--n", cfg.n, "Input width of f")->required()->check(CLI::Range(1U, kMaxOracleBits));
    dj->add_option("--oracle", cfg.oracle,
                   "constant:0|constant:1|balanced:parity|balanced:bit:<i>|balanced:random:<seed>|table:<bits>")
        ->required();
    dj->add_option("--shots", cfg.shots, "Sampled measurements of the first n qubits (0 = exact only)");
    dj->add_option("--seed", cfg.seed, "Seed for sampling and the probabilistic baseline");
    dj->add_option("--k", cfg.samples, "Inputs drawn by the probabilistic baseline")->check(CLI::PositiveNumber);
    dj->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* st = app.add_subcommand("state", "Parse a state, apply gates, measure, test separability");
    st->add_option("expression", cfg.expression, "State in bra-ket notation, e.g. \"(1/sqrt(2))|00> + (1/sqrt(2))|11>\"");
    st->add_option("--file", cfg.file, "Fixture file: one expression per line, '#' comments");
    st->add_option("--qubits", cfg.qubits, "Qubit count, required for decimal ket labels")
        ->check(CLI::Range(1U, kMaxStateQubits));
    st->add_option("--apply", cfg.apply, "Comma-separated gates: i, x, h, cnot, h@q, cnot@q,q+1");
    st->add_flag("--measure", cfg.measure, "Print the exact outcome distribution");
    st->add_flag("--separable", cfg.separable, "Test whether the state is a product of single-qubit states");
    st->add_option("--shots", cfg.shots, "Sampled measurements of the whole register");
    st->add_option("--seed", cfg.seed, "Seed for sampling");
    st->add_option("--labels", cfg.labels, "Output ket labels")->check(CLI::IsMember({"binary", "decimal"}));
    st->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);  // --help
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (dj->parsed()) return detail::cmd_dj(cfg, out, err);
        return detail::cmd_state(cfg, out, err);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const braket::error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << '\n';
        return kExitUnexpected;
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"braket"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace braket::cli
