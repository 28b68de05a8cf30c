#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "braket/errors.hpp"

namespace braket {

using Amplitude = std::complex<double>;

// Largest qubit count representable by a 64-bit basis index.
inline constexpr unsigned kMaxIndexQubits = 63;

// A computational basis state |x>: an n-bit string, most-significant bit first.
// The index is the decimal value of the string, so |100001> has index 33.
class BasisState {
public:
    static BasisState from_bits(std::string_view bits) {
        if (bits.empty()) {
            throw invalid_input("basis state: empty bit-string");
        }
        if (bits.size() > kMaxIndexQubits) {
            throw invalid_input("basis state: bit-string longer than " +
                                std::to_string(kMaxIndexQubits) + " characters");
        }
        std::uint64_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw invalid_input("basis state: non-binary character '" + std::string(1, c) +
                                    "' in \"" + std::string(bits) + "\"");
            }
            index = (index << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return BasisState(static_cast<unsigned>(bits.size()), index);
    }

    static BasisState from_index(std::uint64_t index, unsigned qubits) {
        if (qubits == 0 || qubits > kMaxIndexQubits) {
            throw invalid_input("basis state: qubit count must be in [1, 63]");
        }
        if (index >> qubits) {
            throw invalid_input("basis state: index " + std::to_string(index) + " does not fit in " +
                                std::to_string(qubits) + " qubits");
        }
        return BasisState(qubits, index);
    }

    unsigned qubits() const noexcept { return qubits_; }
    std::uint64_t index() const noexcept { return index_; }

    std::string bits() const { return to_bits(index_, qubits_); }

    // Concatenation of bit-strings: |x> (x) |y> = |xy>.
    BasisState concat(const BasisState& tail) const {
        if (qubits_ + tail.qubits_ > kMaxIndexQubits) {
            throw invalid_input("basis state: concatenation exceeds 63 qubits");
        }
        return BasisState(qubits_ + tail.qubits_, (index_ << tail.qubits_) | tail.index_);
    }

    static std::string to_bits(std::uint64_t index, unsigned qubits) {
        std::string out(qubits, '0');
        for (unsigned b = 0; b < qubits; ++b) {
            if ((index >> b) & 1U) out[qubits - 1 - b] = '1';
        }
        return out;
    }

    friend bool operator==(const BasisState&, const BasisState&) = default;

private:
    BasisState(unsigned qubits, std::uint64_t index) : qubits_(qubits), index_(index) {}

    unsigned qubits_;
    std::uint64_t index_;
};

}  // namespace braket
