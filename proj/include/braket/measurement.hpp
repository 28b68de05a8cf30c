#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braket/basis_state.hpp"
#include "braket/detail/random.hpp"
#include "braket/errors.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

// Probability of each observable bit-string. Keys are most-significant bit
// first and all have the same length; std::map keeps them in lexicographic
// order, which for equal-length bit-strings is also basis-index order.
class OutcomeDistribution {
public:
    using Table = std::map<std::string, double>;

    static OutcomeDistribution from_probabilities(unsigned measured_qubits, Table probs) {
        if (measured_qubits == 0) throw invalid_input("distribution: zero measured qubits");
        double total = 0.0;
        for (const auto& [key, p] : probs) {
            if (key.size() != measured_qubits || key.find_first_not_of("01") != std::string::npos) {
                throw invalid_input("distribution: key \"" + key + "\" is not a " +
                                    std::to_string(measured_qubits) + "-bit string");
            }
            if (!(p >= 0.0 && p <= 1.0 + kNormTolerance)) {
                throw invalid_input("distribution: probability of \"" + key + "\" outside [0, 1]");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kNormTolerance) {
            throw norm_violation("distribution: probabilities sum to " + std::to_string(total), total);
        }
        return OutcomeDistribution(measured_qubits, std::move(probs));
    }

    unsigned measured_qubits() const noexcept { return measured_; }
    const Table& probabilities() const noexcept { return probs_; }

    // Zero for outcomes that were omitted.
    double probability(const std::string& key) const {
        auto it = probs_.find(key);
        return it == probs_.end() ? 0.0 : it->second;
    }

    friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;

private:
    OutcomeDistribution(unsigned measured, Table probs) : measured_(measured), probs_(std::move(probs)) {}

    unsigned measured_;
    Table probs_;
};

// Outcomes at or below this are rounding residue (amplitudes under the
// operator drop threshold) and are omitted like exact zeros.
inline constexpr double kNegligibleProbability = 1e-30;

// Readout law: P(k) = |b_k|^2. Zero-probability outcomes are omitted.
inline OutcomeDistribution probabilities(const QuantumState& state) {
    OutcomeDistribution::Table probs;
    for (std::uint64_t k = 0; k < state.dimension(); ++k) {
        // Rounding can push |b_k|^2 of a unit vector a few ulps past 1.
        const double p = std::min(std::norm(state[k]), 1.0);
        if (p > kNegligibleProbability) probs.emplace(BasisState::to_bits(k, state.qubits()), p);
    }
    return OutcomeDistribution::from_probabilities(state.qubits(), std::move(probs));
}

// Marginal over the first `first_qubits` qubits (the most significant bits):
// P(x) = sum over suffixes y of |amp(x * 2^(n - first) + y)|^2.
inline OutcomeDistribution prefix_distribution(const QuantumState& state, unsigned first_qubits) {
    if (first_qubits < 1 || first_qubits > state.qubits()) {
        throw invalid_input("prefix_distribution: measured qubit count " + std::to_string(first_qubits) +
                            " outside [1, " + std::to_string(state.qubits()) + "]");
    }
    const unsigned suffix_bits = state.qubits() - first_qubits;
    const std::uint64_t suffix_dim = std::uint64_t{1} << suffix_bits;
    OutcomeDistribution::Table probs;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << first_qubits); ++x) {
        double p = 0.0;
        for (std::uint64_t y = 0; y < suffix_dim; ++y) p += std::norm(state[(x << suffix_bits) | y]);
        p = std::min(p, 1.0);
        if (p > kNegligibleProbability) probs.emplace(BasisState::to_bits(x, first_qubits), p);
    }
    return OutcomeDistribution::from_probabilities(first_qubits, std::move(probs));
}

struct MeasurementRecord {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string engine;
    std::map<std::string, std::uint64_t> counts;
};

// Draws `shots` outcomes by inverse CDF over the distribution's keys in
// lexicographic order. Identical (dist, shots, seed) give identical counts.
inline MeasurementRecord sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw invalid_input("sample: shots must be >= 1");
    std::vector<std::pair<const std::string*, double>> cdf;
    double running = 0.0;
    for (const auto& [key, p] : dist.probabilities()) {
        running += p;
        cdf.emplace_back(&key, running);
    }
    std::vector<std::uint64_t> hits(cdf.size(), 0);
    detail::Engine rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // u is scaled by the accumulated total so rounding in the CDF never
        // leaves a gap past the last key.
        const double u = detail::uniform_unit(rng) * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u,
                                   [](double v, const auto& entry) { return v < entry.second; });
        ++hits[it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin())];
    }
    MeasurementRecord record{shots, seed, detail::kEngineName, {}};
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        if (hits[k] > 0) record.counts.emplace(*cdf[k].first, hits[k]);
    }
    return record;
}

}  // namespace braket
