#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braket/detail/random.hpp"
#include "braket/errors.hpp"
#include "braket/gates.hpp"
#include "braket/measurement.hpp"
#include "braket/operator.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

inline constexpr unsigned kMaxOracleBits = 12;
// Up to this register width the n-qubit Hadamard is applied as one operator
// built from its closed form (4^n terms); wider registers apply it as
// successive single-qubit Hadamards, which is the same linear map.
inline constexpr unsigned kDirectHadamardQubits = 9;
// intermediate_state_checks evaluates the closed forms by direct summation.
inline constexpr unsigned kMaxDiagnosticBits = 8;

enum class OracleKind { constant, balanced, unconstrained };
enum class Verdict { constant, balanced };

inline std::string to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::constant: return "constant";
        case OracleKind::balanced: return "balanced";
        case OracleKind::unconstrained: return "unconstrained";
    }
    return "?";
}

inline std::string to_string(Verdict v) { return v == Verdict::constant ? "constant" : "balanced"; }

namespace balanced {
struct Parity {};
// f(x) = bit `index` of x, bit 0 being the most significant.
struct SingleBit {
    unsigned index;
};
// A seeded uniform choice of 2^(n-1) inputs mapped to 1.
struct Random {
    std::uint64_t seed;
};
}  // namespace balanced

using BalancedSpec = std::variant<balanced::Parity, balanced::SingleBit, balanced::Random>;

// Truth table of f: {0,1}^n -> {0,1}, indexed by x.
//
// Classical algorithms read it through query(), which counts every call.
// table() gives uncounted access for building the quantum oracle; the
// quantum cost is counted in operator applications instead.
class BooleanOracle {
public:
    static BooleanOracle make_constant(unsigned n, unsigned value) {
        check_width(n);
        if (value > 1) throw invalid_input("make_constant: value must be 0 or 1");
        return BooleanOracle(n, std::vector<std::uint8_t>(std::size_t{1} << n, static_cast<std::uint8_t>(value)),
                             OracleKind::constant);
    }

    static BooleanOracle make_balanced(unsigned n, const BalancedSpec& spec) {
        check_width(n);
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::uint8_t> table(size, 0);
        if (std::holds_alternative<balanced::Parity>(spec)) {
            for (std::size_t x = 0; x < size; ++x) table[x] = static_cast<std::uint8_t>(std::popcount(x) & 1);
        } else if (const auto* bit = std::get_if<balanced::SingleBit>(&spec)) {
            if (bit->index >= n) {
                throw invalid_input("make_balanced: bit index " + std::to_string(bit->index) + " out of range for " +
                                    std::to_string(n) + " bits");
            }
            const unsigned shift = n - 1 - bit->index;
            for (std::size_t x = 0; x < size; ++x) table[x] = static_cast<std::uint8_t>((x >> shift) & 1);
        } else {
            std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(size / 2), 1);
            detail::Engine rng(std::get<balanced::Random>(spec).seed);
            for (std::size_t i = size - 1; i > 0; --i) {
                std::swap(table[i], table[detail::uniform_below(rng, i + 1)]);
            }
        }
        return BooleanOracle(n, std::move(table), OracleKind::balanced);
    }

    // Kind is inferred from the contents.
    static BooleanOracle from_table(std::vector<std::uint8_t> table) {
        if (table.size() < 2 || !std::has_single_bit(table.size())) {
            throw invalid_input("oracle table length " + std::to_string(table.size()) +
                                " is not a power of two >= 2");
        }
        const auto n = static_cast<unsigned>(std::countr_zero(table.size()));
        check_width(n);
        for (auto v : table) {
            if (v > 1) throw invalid_input("oracle table entries must be 0 or 1");
        }
        const auto ones = static_cast<std::size_t>(std::count(table.begin(), table.end(), 1));
        OracleKind kind = OracleKind::unconstrained;
        if (ones == 0 || ones == table.size()) {
            kind = OracleKind::constant;
        } else if (2 * ones == table.size()) {
            kind = OracleKind::balanced;
        }
        return BooleanOracle(n, std::move(table), kind);
    }

    unsigned bits() const noexcept { return bits_; }
    OracleKind kind() const noexcept { return kind_; }
    std::span<const std::uint8_t> table() const noexcept { return table_; }
    std::uint64_t queries() const noexcept { return queries_; }

    unsigned query(std::uint64_t x) {
        if (x >= table_.size()) throw invalid_input("oracle query out of range");
        ++queries_;
        return table_[x];
    }

private:
    BooleanOracle(unsigned n, std::vector<std::uint8_t> table, OracleKind kind)
        : bits_(n), table_(std::move(table)), kind_(kind) {}

    static void check_width(unsigned n) {
        if (n < 1 || n > kMaxOracleBits) {
            throw invalid_input("oracle width " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxOracleBits) + "]");
        }
    }

    unsigned bits_;
    std::vector<std::uint8_t> table_;
    OracleKind kind_;
    std::uint64_t queries_ = 0;
};

// Oracle spec strings: "constant:0", "constant:1", "balanced:parity",
// "balanced:bit:<i>", "balanced:random:<seed>", and "table:<bits>" where the
// bit-string lists f(0), f(1), ... and must have length 2^n.
inline BooleanOracle parse_oracle_spec(std::string_view spec, unsigned n) {
    auto parse_uint = [&](std::string_view digits) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw invalid_input("oracle spec \"" + std::string(spec) + "\": expected a non-negative integer");
        }
        return v;
    };
    if (spec == "constant:0") return BooleanOracle::make_constant(n, 0);
    if (spec == "constant:1") return BooleanOracle::make_constant(n, 1);
    if (spec == "balanced:parity") return BooleanOracle::make_balanced(n, balanced::Parity{});
    if (spec.starts_with("balanced:bit:")) {
        const auto index = parse_uint(spec.substr(13));
        if (index >= n) throw invalid_input("oracle spec \"" + std::string(spec) + "\": bit index out of range");
        return BooleanOracle::make_balanced(n, balanced::SingleBit{static_cast<unsigned>(index)});
    }
    if (spec.starts_with("balanced:random:")) {
        return BooleanOracle::make_balanced(n, balanced::Random{parse_uint(spec.substr(16))});
    }
    if (spec.starts_with("table:")) {
        const auto bits = spec.substr(6);
        if (bits.size() != (std::size_t{1} << std::min(n, 63U))) {
            throw invalid_input("oracle spec \"" + std::string(spec) + "\": table needs " +
                                std::to_string(std::size_t{1} << std::min(n, 63U)) + " entries for n = " +
                                std::to_string(n));
        }
        std::vector<std::uint8_t> table;
        for (char c : bits) {
            if (c != '0' && c != '1') throw invalid_input("oracle spec \"" + std::string(spec) + "\": non-binary table");
            table.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BooleanOracle::from_table(std::move(table));
    }
    throw invalid_input("unknown oracle spec \"" + std::string(spec) + "\"");
}

// U_f |x>|y> = |x>|y xor f(x)>, a permutation on n+1 qubits with the answer
// qubit last. Reads the table without counting queries.
inline Operator build_oracle_operator(const BooleanOracle& f) {
    const unsigned n = f.bits();
    std::vector<Term> terms;
    terms.reserve(std::size_t{2} << n);
    const auto table = f.table();
    for (std::uint64_t x = 0; x < table.size(); ++x) {
        for (std::uint64_t y = 0; y < 2; ++y) {
            terms.push_back({(x << 1) | (y ^ table[x]), (x << 1) | y, 1.0});
        }
    }
    return Operator::from_terms(n + 1, std::move(terms));
}

namespace detail {

// H on each of the first `count` qubits of `state`.
inline QuantumState hadamard_on_prefix(const QuantumState& state, unsigned count) {
    const unsigned total = state.qubits();
    if (total <= kDirectHadamardQubits) {
        const Operator layer =
            count == total ? hadamard_n(total) : tensor_ops(hadamard_n(count), identity(total - count));
        return apply(layer, state).output;
    }
    QuantumState current = state;
    const Operator h = hadamard();
    for (unsigned q = 0; q < count; ++q) current = apply(on_qubits(h, q, total), current).output;
    return current;
}

inline bool satisfies_promise(const BooleanOracle& f) {
    const auto table = f.table();
    const auto ones = static_cast<std::size_t>(std::count(table.begin(), table.end(), 1));
    return ones == 0 || ones == table.size() || 2 * ones == table.size();
}

}  // namespace detail

// Statevectors after each gate layer of the circuit.
struct DJTrace {
    QuantumState after_hadamard;     // H^(n+1) |0...0>|1>
    QuantumState after_oracle;       // U_f applied
    QuantumState after_interference; // H^n (x) I applied
};

inline DJTrace run_dj_circuit(const BooleanOracle& f) {
    const unsigned n = f.bits();
    QuantumState input = basis_state("0");
    for (unsigned q = 1; q < n; ++q) input = tensor_states(input, basis_state("0"));
    input = tensor_states(input, basis_state("1"));

    QuantumState s1 = detail::hadamard_on_prefix(input, n + 1);
    QuantumState s2 = apply(build_oracle_operator(f), s1).output;
    QuantumState s3 = detail::hadamard_on_prefix(s2, n);
    return {std::move(s1), std::move(s2), std::move(s3)};
}

struct DJResult {
    Verdict verdict;
    // Probability that the first n qubits read all zeros.
    double p_zero;
    unsigned oracle_applications;
    unsigned gate_layers;
    OutcomeDistribution distribution;
    // The oracle is neither constant nor balanced; verdict and p_zero are still
    // reported but carry no guarantee.
    bool promise_violated;
};

// Exact (unsampled) Deutsch-Jozsa: the verdict is constant iff the all-zeros
// prefix has probability above 1/2.
inline DJResult deutsch_jozsa(const BooleanOracle& f) {
    const unsigned n = f.bits();
    DJTrace trace = run_dj_circuit(f);
    OutcomeDistribution dist = prefix_distribution(trace.after_interference, n);
    const double p_zero = dist.probability(std::string(n, '0'));
    const bool violated = f.kind() == OracleKind::unconstrained || !detail::satisfies_promise(f);
    return {p_zero > 0.5 ? Verdict::constant : Verdict::balanced, p_zero, 1, 3, std::move(dist), violated};
}

struct DJDiagnostics {
    double after_hadamard_deviation = 0.0;
    double after_oracle_deviation = 0.0;
    double after_interference_deviation = 0.0;
    // Signs of the post-oracle amplitudes equal (-1)^f(x) * (+1 for y=0, -1 for y=1).
    bool oracle_signs_match = true;
    // Simulated amplitude c_j of |j> on the first n qubits after the final
    // Hadamard layer (the answer qubit factors out as (|0> - |1>)/sqrt(2)).
    std::vector<Amplitude> interference_amplitudes;

    double max_deviation() const {
        return std::max({after_hadamard_deviation, after_oracle_deviation, after_interference_deviation});
    }
};

// Compares each simulated layer against its closed form:
//   after H^(n+1):  amp(x, y) = (-1)^y / sqrt(2^(n+1))
//   after U_f:      amp(x, y) = (-1)^(f(x) + y) / sqrt(2^(n+1))
//   after H^n (x) I: amp(j, y) = (-1)^y / sqrt(2) * 2^-n * sum_x (-1)^(f(x) + x.j)
inline DJDiagnostics intermediate_state_checks(const BooleanOracle& f) {
    const unsigned n = f.bits();
    if (n > kMaxDiagnosticBits) {
        throw invalid_input("intermediate_state_checks: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxDiagnosticBits));
    }
    const DJTrace trace = run_dj_circuit(f);
    const auto table = f.table();
    const std::uint64_t size = table.size();
    const double layer_scale = 1.0 / std::sqrt(static_cast<double>(2 * size));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    DJDiagnostics d;
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = 0; y < 2; ++y) {
            const std::uint64_t k = (x << 1) | y;
            const double sign_y = y ? -1.0 : 1.0;
            const double sign_f = table[x] ? -1.0 : 1.0;
            d.after_hadamard_deviation =
                std::max(d.after_hadamard_deviation, std::abs(trace.after_hadamard[k] - Amplitude{sign_y * layer_scale}));
            const Amplitude expected = sign_f * sign_y * layer_scale;
            d.after_oracle_deviation = std::max(d.after_oracle_deviation, std::abs(trace.after_oracle[k] - expected));
            if (std::signbit(trace.after_oracle[k].real()) != std::signbit(expected.real())) {
                d.oracle_signs_match = false;
            }
        }
    }
    d.interference_amplitudes.reserve(size);
    for (std::uint64_t j = 0; j < size; ++j) {
        double sum = 0.0;
        for (std::uint64_t x = 0; x < size; ++x) sum += ((table[x] + bitdot(x, j)) & 1U) ? -1.0 : 1.0;
        const double c = sum / static_cast<double>(size);
        for (std::uint64_t y = 0; y < 2; ++y) {
            const Amplitude expected = (y ? -1.0 : 1.0) * inv_sqrt2 * c;
            d.after_interference_deviation =
                std::max(d.after_interference_deviation, std::abs(trace.after_interference[(j << 1) | y] - expected));
        }
        d.interference_amplitudes.push_back(trace.after_interference[j << 1] * std::sqrt(2.0));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

struct ClassicalOutcome {
    Verdict verdict;
    std::uint64_t queries;
    // Upper bound on the chance the verdict is wrong under the promise.
    double error_bound;
};

// Probes x = 0, 1, 2, ... until two answers differ (balanced) or 2^(n-1) + 1
// answers agree (constant, since a balanced f has only 2^(n-1) of each value).
inline ClassicalOutcome classify_classical_deterministic(BooleanOracle& f) {
    const std::uint64_t before = f.queries();
    const std::uint64_t needed = (std::uint64_t{1} << (f.bits() - 1)) + 1;
    const unsigned first = f.query(0);
    for (std::uint64_t x = 1; x < needed; ++x) {
        if (f.query(x) != first) return {Verdict::balanced, f.queries() - before, 0.0};
    }
    return {Verdict::constant, f.queries() - before, 0.0};
}

// Queries k distinct inputs chosen uniformly at random (without replacement;
// k is capped at 2^n). Any disagreement proves balanced and stops early;
// unanimous answers are reported as constant with error bound 2^-k, or 0 when
// every input was probed.
inline ClassicalOutcome classify_classical_probabilistic(BooleanOracle& f, std::uint64_t k, std::uint64_t seed) {
    if (k < 1) throw invalid_input("classify_classical_probabilistic: k must be >= 1");
    const std::uint64_t before = f.queries();
    const std::uint64_t size = f.table().size();
    const std::uint64_t draws = std::min(k, size);
    std::vector<std::uint64_t> order(size);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    detail::Engine rng(seed);
    std::optional<unsigned> first;
    for (std::uint64_t d = 0; d < draws; ++d) {
        std::swap(order[d], order[d + detail::uniform_below(rng, size - d)]);
        const unsigned v = f.query(order[d]);
        if (!first) {
            first = v;
        } else if (v != *first) {
            return {Verdict::balanced, f.queries() - before, 0.0};
        }
    }
    const double bound = draws == size ? 0.0 : std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(k, 1074)));
    return {Verdict::constant, f.queries() - before, bound};
}

}  // namespace braket
