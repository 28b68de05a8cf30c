#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "braket/errors.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

inline constexpr double kSeparabilityTolerance = 1e-10;

struct FactorizationResult {
    bool is_product = false;
    // One single-qubit state per qubit, leftmost first; present only when is_product.
    std::optional<std::vector<QuantumState>> factors;
    // Max |(f_0 (x) ... (x) f_{n-1})_k - state_k| for the best rank-one peel.
    double residual = 0.0;
};

// Decides whether `state` is a tensor product of single-qubit states.
//
// The leading qubit is peeled off by viewing the amplitudes as a 2 x 2^(n-1)
// array with rows r0 (leading bit 0) and r1 (leading bit 1). The cut is
// separable iff the array has rank one, i.e. every 2x2 minor
// r0[j] r1[k] - r0[k] r1[j] vanishes. For n = 2 this is exactly the condition
// a0 b1 - a1 b0 = 0 that rules out the Bell state. Minors are tested against
// the dominant column, which is equivalent to testing all pairs in exact
// arithmetic, and are compared to tol * max|amp|^2.
//
// Each factor is canonicalized so its first non-negligible amplitude is real
// and non-negative; the leftover global phase ends up in the last factor.
inline FactorizationResult is_product_state(const QuantumState& state, double tol = kSeparabilityTolerance) {
    if (!(tol > 0.0)) throw invalid_input("is_product_state: tolerance must be positive");

    double max_amp = 0.0;
    for (const auto& a : state.amplitudes()) max_amp = std::max(max_amp, std::abs(a));
    const double minor_tol = tol * max_amp * max_amp;

    bool separable = true;
    std::vector<std::vector<Amplitude>> factors;
    std::vector<Amplitude> rest(state.amplitudes().begin(), state.amplitudes().end());

    while (rest.size() > 2) {
        const std::size_t half = rest.size() / 2;
        std::size_t pivot = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < half; ++j) {
            const double w = std::norm(rest[j]) + std::norm(rest[half + j]);
            if (w > best) {
                best = w;
                pivot = j;
            }
        }
        const Amplitude p0 = rest[pivot];
        const Amplitude p1 = rest[half + pivot];
        for (std::size_t j = 0; j < half && separable; ++j) {
            if (std::abs(p0 * rest[half + j] - rest[j] * p1) > minor_tol) separable = false;
        }

        std::vector<Amplitude> q{p0, p1};
        const double qn = std::sqrt(std::norm(p0) + std::norm(p1));
        for (auto& c : q) c /= qn;
        const Amplitude& lead = std::abs(q[0]) > kZeroNorm ? q[0] : q[1];
        const Amplitude phase = lead / std::abs(lead);
        for (auto& c : q) c *= std::conj(phase);

        // Project the 2 x 2^(n-1) array onto q: the remaining (n-1)-qubit vector.
        std::vector<Amplitude> next(half);
        for (std::size_t j = 0; j < half; ++j) {
            next[j] = std::conj(q[0]) * rest[j] + std::conj(q[1]) * rest[half + j];
        }
        factors.push_back(std::move(q));
        rest = std::move(next);
    }
    factors.push_back(rest);

    // Reconstruct and measure the residual against the input.
    std::vector<Amplitude> recon{1.0};
    for (const auto& f : factors) {
        std::vector<Amplitude> grown;
        grown.reserve(recon.size() * 2);
        for (const auto& a : recon) {
            grown.push_back(a * f[0]);
            grown.push_back(a * f[1]);
        }
        recon = std::move(grown);
    }
    FactorizationResult result;
    for (std::size_t k = 0; k < recon.size(); ++k) {
        result.residual = std::max(result.residual, std::abs(recon[k] - state[k]));
    }
    result.is_product = separable && result.residual <= tol;
    if (result.is_product) {
        std::vector<QuantumState> out;
        out.reserve(factors.size());
        for (auto& f : factors) out.push_back(QuantumState::normalized(std::move(f)));
        result.factors = std::move(out);
    }
    return result;
}

}  // namespace braket
