#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braket/basis_state.hpp"
#include "braket/errors.hpp"

namespace braket {

// Tolerance on |sum |a_k|^2 - 1| accepted by checked constructors.
inline constexpr double kNormTolerance = 1e-12;
// Below this Euclidean norm a vector is treated as the zero vector.
inline constexpr double kZeroNorm = 1e-12;
// Dense states are 2^n complex doubles; 24 qubits is 256 MiB.
inline constexpr unsigned kMaxStateQubits = 24;

enum class Normalization { check, automatic };

namespace detail {

inline bool is_finite(const Amplitude& a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

inline double norm_squared(std::span<const Amplitude> amps) {
    double sum = 0.0;
    for (const auto& a : amps) sum += std::norm(a);
    return sum;
}

inline unsigned qubits_for_dimension(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw dimension_mismatch("amplitude array length " + std::to_string(dim) +
                                 " is not a power of two >= 2");
    }
    auto n = static_cast<unsigned>(std::countr_zero(dim));
    if (n > kMaxStateQubits) {
        throw resource_limit("state of " + std::to_string(n) + " qubits exceeds the " +
                             std::to_string(kMaxStateQubits) + "-qubit limit");
    }
    return n;
}

inline void require_finite(std::span<const Amplitude> amps) {
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (!is_finite(amps[k])) {
            throw invalid_input("non-finite amplitude at index " + std::to_string(k));
        }
    }
}

}  // namespace detail

// Unit-norm vector of 2^n complex amplitudes indexed by basis index.
// Immutable once constructed.
class QuantumState {
public:
    // Throws norm_violation unless the squared norm is 1 within kNormTolerance.
    static QuantumState from_amplitudes(std::vector<Amplitude> amps) {
        unsigned n = detail::qubits_for_dimension(amps.size());
        detail::require_finite(amps);
        double norm2 = detail::norm_squared(amps);
        if (std::abs(norm2 - 1.0) > kNormTolerance) {
            throw norm_violation("state norm " + std::to_string(std::sqrt(norm2)) + " is not 1",
                                 std::sqrt(norm2));
        }
        return QuantumState(n, std::move(amps));
    }

    // Divides by the Euclidean norm. Throws zero_state for a (numerically) zero vector.
    static QuantumState normalized(std::vector<Amplitude> amps) {
        unsigned n = detail::qubits_for_dimension(amps.size());
        detail::require_finite(amps);
        double norm = std::sqrt(detail::norm_squared(amps));
        if (norm < kZeroNorm) {
            throw zero_state("cannot normalize the zero vector");
        }
        for (auto& a : amps) a /= norm;
        return QuantumState(n, std::move(amps));
    }

    unsigned qubits() const noexcept { return qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    const Amplitude& operator[](std::size_t k) const { return amps_[k]; }

private:
    QuantumState(unsigned n, std::vector<Amplitude> amps) : qubits_(n), amps_(std::move(amps)) {}

    unsigned qubits_;
    std::vector<Amplitude> amps_;
};

inline QuantumState normalize(std::vector<Amplitude> amps) { return QuantumState::normalized(std::move(amps)); }

inline QuantumState basis_state(const BasisState& basis) {
    if (basis.qubits() > kMaxStateQubits) {
        throw resource_limit("basis state of " + std::to_string(basis.qubits()) + " qubits exceeds the " +
                             std::to_string(kMaxStateQubits) + "-qubit limit");
    }
    std::vector<Amplitude> amps(std::size_t{1} << basis.qubits());
    amps[basis.index()] = 1.0;
    return QuantumState::from_amplitudes(std::move(amps));
}

inline QuantumState basis_state(std::string_view bits) { return basis_state(BasisState::from_bits(bits)); }

struct WeightedBasis {
    Amplitude weight;
    BasisState basis;
};

// Weighted sum of same-length basis states. Duplicate basis states are summed
// before the norm check.
inline QuantumState superpose(std::span<const WeightedBasis> terms,
                              Normalization policy = Normalization::check) {
    if (terms.empty()) {
        throw invalid_input("superpose: no terms");
    }
    const unsigned n = terms.front().basis.qubits();
    if (n > kMaxStateQubits) {
        throw resource_limit("superpose: " + std::to_string(n) + " qubits exceeds the limit");
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (const auto& t : terms) {
        if (t.basis.qubits() != n) {
            throw dimension_mismatch("superpose: mixed qubit counts " + std::to_string(n) + " and " +
                                     std::to_string(t.basis.qubits()));
        }
        if (!detail::is_finite(t.weight)) {
            throw invalid_input("superpose: non-finite weight");
        }
        amps[t.basis.index()] += t.weight;
    }
    if (std::sqrt(detail::norm_squared(amps)) < kZeroNorm) {
        throw zero_state("superpose: all weights cancel to zero");
    }
    return policy == Normalization::automatic ? QuantumState::normalized(std::move(amps))
                                              : QuantumState::from_amplitudes(std::move(amps));
}

inline QuantumState superpose(std::initializer_list<WeightedBasis> terms,
                              Normalization policy = Normalization::check) {
    return superpose(std::span<const WeightedBasis>(terms.begin(), terms.size()), policy);
}

// <bra|ket> = sum_k conj(bra_k) * ket_k
inline Amplitude dot(const QuantumState& bra, const QuantumState& ket) {
    if (bra.qubits() != ket.qubits()) {
        throw dimension_mismatch("dot: " + std::to_string(bra.qubits()) + "-qubit bra with " +
                                 std::to_string(ket.qubits()) + "-qubit ket");
    }
    Amplitude sum{};
    for (std::size_t k = 0; k < bra.dimension(); ++k) sum += std::conj(bra[k]) * ket[k];
    return sum;
}

// (a (x) b)[i * 2^m + j] = a[i] * b[j], where b has m qubits.
inline QuantumState tensor_states(const QuantumState& a, const QuantumState& b) {
    if (a.qubits() + b.qubits() > kMaxStateQubits) {
        throw resource_limit("tensor_states: result exceeds the " + std::to_string(kMaxStateQubits) +
                             "-qubit limit");
    }
    std::vector<Amplitude> out;
    out.reserve(a.dimension() * b.dimension());
    for (const auto& x : a.amplitudes()) {
        for (const auto& y : b.amplitudes()) out.push_back(x * y);
    }
    return QuantumState::from_amplitudes(std::move(out));
}

// Max per-amplitude deviation; states of different size compare as infinitely far.
inline double max_deviation(const QuantumState& a, const QuantumState& b) {
    if (a.dimension() != b.dimension()) return INFINITY;
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace braket
