#pragma once

// Seeded generators and brute-force dense references shared by the suites.
// Nothing here calls into the library's algebra; the references are built
// from Eigen matrices and explicit loops.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "braket/braket.hpp"

namespace braket::testkit {

using Rng = std::mt19937_64;

inline Amplitude random_amplitude(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

// Haar-ish random unit state (normalized complex Gaussian vector).
inline QuantumState random_state(unsigned n, Rng& rng) {
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) a = random_amplitude(rng);
    return normalize(std::move(amps));
}

// Random state with roughly `density` of its amplitudes zeroed.
inline QuantumState random_sparse_state(unsigned n, double density, Rng& rng) {
    std::bernoulli_distribution keep(density);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) {
        if (keep(rng)) a = random_amplitude(rng);
    }
    amps[0] += 1e-3;  // never all-zero
    return normalize(std::move(amps));
}

inline Operator random_operator(unsigned n, std::size_t terms, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> idx(0, (std::uint64_t{1} << n) - 1);
    std::vector<Term> t;
    for (std::size_t k = 0; k < terms; ++k) t.push_back({idx(rng), idx(rng), random_amplitude(rng)});
    return Operator::from_terms(n, std::move(t));
}

inline Eigen::VectorXcd to_vector(const QuantumState& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t k = 0; k < s.dimension(); ++k) v(static_cast<Eigen::Index>(k)) = s[k];
    return v;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXcd dense_hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd h(2, 2);
    h << s, s, s, -s;
    return h;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace braket::testkit
