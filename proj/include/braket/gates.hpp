#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "braket/errors.hpp"
#include "braket/operator.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

// hadamard_n materializes 4^n terms; beyond this it refuses.
inline constexpr unsigned kMaxHadamardQubits = 12;

// ---------------------------------------------------------------------------
// Standard gates, written as the ket-bra sums that define them.
// ---------------------------------------------------------------------------

inline Operator identity(unsigned n) {
    if (n == 0) throw invalid_input("identity: qubit count must be >= 1");
    if (n > kMaxOperatorQubits) throw resource_limit("identity: too many qubits");
    std::vector<Term> terms;
    terms.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) terms.push_back({i, i, 1.0});
    return Operator::from_terms(n, std::move(terms));
}

// X = |0><1| + |1><0|
inline Operator pauli_x() {
    return operator_from_terms({
        {1.0, BasisState::from_bits("0"), BasisState::from_bits("1")},
        {1.0, BasisState::from_bits("1"), BasisState::from_bits("0")},
    });
}

// H = (|0><0| + |1><0| + |0><1| - |1><1|) / sqrt(2)
inline Operator hadamard() {
    const double s = std::numbers::sqrt2 / 2.0;
    return operator_from_terms({
        {s, BasisState::from_bits("0"), BasisState::from_bits("0")},
        {s, BasisState::from_bits("1"), BasisState::from_bits("0")},
        {s, BasisState::from_bits("0"), BasisState::from_bits("1")},
        {-s, BasisState::from_bits("1"), BasisState::from_bits("1")},
    });
}

// CNOT = |00><00| + |01><01| + |11><10| + |10><11|; the first qubit controls.
inline Operator cnot() {
    return operator_from_terms({
        {1.0, BasisState::from_bits("00"), BasisState::from_bits("00")},
        {1.0, BasisState::from_bits("01"), BasisState::from_bits("01")},
        {1.0, BasisState::from_bits("11"), BasisState::from_bits("10")},
        {1.0, BasisState::from_bits("10"), BasisState::from_bits("11")},
    });
}

// Parity of the bitwise AND: k.j = k_0 j_0 xor k_1 j_1 xor ...
constexpr unsigned bitdot(std::uint64_t k, std::uint64_t j) noexcept {
    return static_cast<unsigned>(std::popcount(k & j) & 1);
}

// n-qubit Hadamard from its closed form: entry (j, k) = (-1)^(k.j) / sqrt(2^n).
inline Operator hadamard_n(unsigned n) {
    if (n == 0) throw invalid_input("hadamard_n: qubit count must be >= 1");
    if (n > kMaxHadamardQubits) {
        throw resource_limit("hadamard_n: " + std::to_string(n) + " qubits exceeds " +
                             std::to_string(kMaxHadamardQubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Term> terms;
    terms.reserve(dim * dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            terms.push_back({j, k, bitdot(k, j) ? -scale : scale});
        }
    }
    return Operator::from_terms(n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

// Conjugate transpose: each a_ij |i><j| becomes conj(a_ij) |j><i|.
inline Operator adjoint(const Operator& op) {
    std::vector<Term> terms;
    terms.reserve(op.size());
    for (const auto& t : op.terms()) terms.push_back({t.bra, t.ket, std::conj(t.weight)});
    return Operator::from_terms(op.qubits(), std::move(terms));
}

// Matrix product a * b.
inline Operator compose(const Operator& a, const Operator& b) {
    if (a.qubits() != b.qubits()) {
        throw dimension_mismatch("compose: " + std::to_string(a.qubits()) + "-qubit and " +
                                 std::to_string(b.qubits()) + "-qubit operators");
    }
    const auto dim = static_cast<std::size_t>(a.dimension());
    // Row-by-row accumulation with a scatter buffer; a's terms are grouped by row.
    std::vector<Amplitude> acc(dim);
    std::vector<char> seen(dim, 0);
    std::vector<std::uint64_t> touched;
    std::vector<Term> out;
    auto terms = a.terms();
    for (std::size_t begin = 0; begin < terms.size();) {
        const std::uint64_t row = terms[begin].ket;
        std::size_t end = begin;
        for (; end < terms.size() && terms[end].ket == row; ++end) {
            for (const auto& bt : b.row(terms[end].bra)) {
                if (!seen[bt.bra]) {
                    seen[bt.bra] = 1;
                    touched.push_back(bt.bra);
                }
                acc[bt.bra] += terms[end].weight * bt.weight;
            }
        }
        for (auto col : touched) {
            out.push_back({row, col, acc[col]});
            acc[col] = {};
            seen[col] = 0;
        }
        touched.clear();
        begin = end;
    }
    return Operator::from_terms(a.qubits(), std::move(out));
}

// a (x) b: kets and bras concatenate, weights multiply.
inline Operator tensor_ops(const Operator& a, const Operator& b) {
    const unsigned n = a.qubits() + b.qubits();
    if (n > kMaxOperatorQubits) {
        throw resource_limit("tensor_ops: result exceeds " + std::to_string(kMaxOperatorQubits) + " qubits");
    }
    const unsigned shift = b.qubits();
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            terms.push_back({(ta.ket << shift) | tb.ket, (ta.bra << shift) | tb.bra, ta.weight * tb.weight});
        }
    }
    return Operator::from_terms(n, std::move(terms));
}

// Places a k-qubit gate on qubits [first, first + k) of a `total`-qubit
// register, padding with identities on either side. Qubit 0 is the leftmost
// (most significant) position.
inline Operator on_qubits(const Operator& gate, unsigned first, unsigned total) {
    if (first + gate.qubits() > total) {
        throw dimension_mismatch("on_qubits: " + std::to_string(gate.qubits()) + "-qubit gate at position " +
                                 std::to_string(first) + " does not fit in " + std::to_string(total) + " qubits");
    }
    Operator result = gate;
    if (first > 0) result = tensor_ops(identity(first), result);
    const unsigned tail = total - first - gate.qubits();
    if (tail > 0) result = tensor_ops(result, identity(tail));
    return result;
}

// O O^dagger = O^dagger O = I within `tol` entrywise.
inline bool is_unitary(const Operator& op, double tol) {
    if (!(tol > 0.0)) throw invalid_input("is_unitary: tolerance must be positive");
    const Operator dag = adjoint(op);
    const Operator id = identity(op.qubits());
    return max_entry_deviation(compose(op, dag), id) <= tol && max_entry_deviation(compose(dag, op), id) <= tol;
}

// ---------------------------------------------------------------------------
// Application
// ---------------------------------------------------------------------------

struct ApplyReport {
    QuantumState output;
    // Euclidean norm of the unnormalized product; 1 for unitary operators.
    double normalization_factor;
};

// Unnormalized product O psi: entry i is the sum of a_ik b_k over stored
// (non-zero) a_ik with non-zero b_k.
inline std::vector<Amplitude> raw_product(const Operator& op, const QuantumState& state) {
    if (op.qubits() != state.qubits()) {
        throw dimension_mismatch("apply: " + std::to_string(op.qubits()) + "-qubit operator on " +
                                 std::to_string(state.qubits()) + "-qubit state");
    }
    std::vector<Amplitude> raw(state.dimension());
    for (const auto& t : op.terms()) {
        const Amplitude& b = state[t.bra];
        if (b == Amplitude{}) continue;
        raw[t.ket] += t.weight * b;
    }
    return raw;
}

// O(psi) = O psi / |O psi|, reporting the divisor.
inline ApplyReport apply(const Operator& op, const QuantumState& state) {
    std::vector<Amplitude> raw = raw_product(op, state);
    const double factor = std::sqrt(detail::norm_squared(raw));
    if (factor < kZeroNorm) {
        throw annihilated_state("apply: operator maps the state to the zero vector");
    }
    for (auto& a : raw) a /= factor;
    return {QuantumState::from_amplitudes(std::move(raw)), factor};
}

}  // namespace braket
