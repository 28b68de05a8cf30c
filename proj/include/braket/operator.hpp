#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "braket/basis_state.hpp"
#include "braket/errors.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

// Weights whose magnitude falls below this after summing duplicates are dropped.
inline constexpr double kDropThreshold = 1e-15;
// to_dense refuses operators on more qubits than this (4^13 complex entries).
inline constexpr unsigned kMaxDenseQubits = 13;
// Operators are indexed with 64-bit keys; 2^n x 2^n must stay addressable.
inline constexpr unsigned kMaxOperatorQubits = 31;

// One weighted ket-bra a_ij |i><j|, by basis index.
struct Term {
    std::uint64_t ket;
    std::uint64_t bra;
    Amplitude weight;
};

// One weighted ket-bra with explicit bit-strings.
struct KetBraTerm {
    Amplitude weight;
    BasisState ket;
    BasisState bra;
};

// Linear operator on n qubits stored as a sum of ket-bra terms.
//
// Terms are kept sorted by (ket, bra) with duplicates merged and near-zero
// weights removed, so the term list is the canonical sparse form of the matrix.
// Row i of the matrix is the contiguous run of terms with ket == i.
class Operator {
public:
    // Canonicalizes arbitrary terms: sort, sum duplicates, drop |w| < kDropThreshold.
    static Operator from_terms(unsigned qubits, std::vector<Term> terms) {
        if (qubits == 0 || qubits > kMaxOperatorQubits) {
            throw invalid_input("operator: qubit count must be in [1, " +
                                std::to_string(kMaxOperatorQubits) + "]");
        }
        const std::uint64_t dim = std::uint64_t{1} << qubits;
        for (const auto& t : terms) {
            if (t.ket >= dim || t.bra >= dim) {
                throw dimension_mismatch("operator: term index out of range for " + std::to_string(qubits) +
                                         " qubits");
            }
            if (!detail::is_finite(t.weight)) {
                throw invalid_input("operator: non-finite weight");
            }
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return std::tie(a.ket, a.bra) < std::tie(b.ket, b.bra);
        });
        std::vector<Term> merged;
        merged.reserve(terms.size());
        for (const auto& t : terms) {
            if (!merged.empty() && merged.back().ket == t.ket && merged.back().bra == t.bra) {
                merged.back().weight += t.weight;
            } else {
                merged.push_back(t);
            }
        }
        std::erase_if(merged, [](const Term& t) { return std::abs(t.weight) < kDropThreshold; });
        return Operator(qubits, std::move(merged));
    }

    static Operator zero(unsigned qubits) { return from_terms(qubits, {}); }

    unsigned qubits() const noexcept { return qubits_; }
    std::uint64_t dimension() const noexcept { return std::uint64_t{1} << qubits_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    // Matrix entry (i, j); zero when no term is stored.
    Amplitude entry(std::uint64_t ket, std::uint64_t bra) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{ket, bra},
                                   [](const Term& t, const std::pair<std::uint64_t, std::uint64_t>& key) {
                                       return std::tie(t.ket, t.bra) < std::tie(key.first, key.second);
                                   });
        if (it != terms_.end() && it->ket == ket && it->bra == bra) return it->weight;
        return {};
    }

    // Terms of row `ket`, i.e. all a_{ket, j}.
    std::span<const Term> row(std::uint64_t ket) const {
        auto lo = std::lower_bound(terms_.begin(), terms_.end(), ket,
                                   [](const Term& t, std::uint64_t k) { return t.ket < k; });
        auto hi = std::upper_bound(lo, terms_.end(), ket,
                                   [](std::uint64_t k, const Term& t) { return k < t.ket; });
        return {lo, hi};
    }

private:
    Operator(unsigned qubits, std::vector<Term> terms) : qubits_(qubits), terms_(std::move(terms)) {}

    unsigned qubits_;
    std::vector<Term> terms_;
};

// Builds an operator from weighted ket-bras written as bit-strings.
inline Operator operator_from_terms(std::span<const KetBraTerm> terms) {
    if (terms.empty()) {
        throw invalid_input("operator_from_terms: no terms, qubit count unknown");
    }
    const unsigned n = terms.front().ket.qubits();
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.ket.qubits() != n || t.bra.qubits() != n) {
            throw dimension_mismatch("operator_from_terms: mixed bit-string lengths");
        }
        raw.push_back({t.ket.index(), t.bra.index(), t.weight});
    }
    return Operator::from_terms(n, std::move(raw));
}

inline Operator operator_from_terms(std::initializer_list<KetBraTerm> terms) {
    return operator_from_terms(std::span<const KetBraTerm>(terms.begin(), terms.size()));
}

// |ket><bra| with entry (i, j) = ket_i * conj(bra_j).
inline Operator outer(const QuantumState& ket, const QuantumState& bra) {
    if (ket.qubits() != bra.qubits()) {
        throw dimension_mismatch("outer: " + std::to_string(ket.qubits()) + "-qubit ket with " +
                                 std::to_string(bra.qubits()) + "-qubit bra");
    }
    std::vector<Term> terms;
    for (std::uint64_t i = 0; i < ket.dimension(); ++i) {
        if (ket[i] == Amplitude{}) continue;
        for (std::uint64_t j = 0; j < bra.dimension(); ++j) {
            if (bra[j] == Amplitude{}) continue;
            terms.push_back({i, j, ket[i] * std::conj(bra[j])});
        }
    }
    return Operator::from_terms(ket.qubits(), std::move(terms));
}

inline Eigen::MatrixXcd to_dense(const Operator& op) {
    if (op.qubits() > kMaxDenseQubits) {
        throw resource_limit("to_dense: " + std::to_string(op.qubits()) + " qubits exceeds the dense guard of " +
                             std::to_string(kMaxDenseQubits));
    }
    const auto dim = static_cast<Eigen::Index>(op.dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : op.terms()) {
        m(static_cast<Eigen::Index>(t.ket), static_cast<Eigen::Index>(t.bra)) = t.weight;
    }
    return m;
}

// Entrywise comparison by merging the sorted term lists; absent terms count as zero.
inline double max_entry_deviation(const Operator& a, const Operator& b) {
    if (a.qubits() != b.qubits()) return INFINITY;
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0.0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && std::tie(ta[i].ket, ta[i].bra) < std::tie(tb[j].ket, tb[j].bra))) {
            worst = std::max(worst, std::abs(ta[i++].weight));
        } else if (i == ta.size() || std::tie(tb[j].ket, tb[j].bra) < std::tie(ta[i].ket, ta[i].bra)) {
            worst = std::max(worst, std::abs(tb[j++].weight));
        } else {
            worst = std::max(worst, std::abs(ta[i++].weight - tb[j++].weight));
        }
    }
    return worst;
}

inline bool approx_equal(const Operator& a, const Operator& b, double tol) {
    return max_entry_deviation(a, b) <= tol;
}

}  // namespace braket
