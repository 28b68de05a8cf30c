#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "braket/dirac.hpp"
#include "braket/measurement.hpp"
#include "test_support.hpp"

using namespace braket;
using namespace std::complex_literals;

namespace {

double total(const OutcomeDistribution& d) {
    double s = 0.0;
    for (const auto& [k, p] : d.probabilities()) s += p;
    return s;
}

}  // namespace

TEST(Probabilities, Examples) {
    auto single = probabilities(basis_state("0"));
    EXPECT_EQ(single.probabilities(), (OutcomeDistribution::Table{{"0", 1.0}}));

    auto s = QuantumState::from_amplitudes({0.0, 1i / std::sqrt(3.0), 0.0, std::sqrt(2.0 / 3.0)});
    auto two = probabilities(s);
    ASSERT_EQ(two.probabilities().size(), 2U);
    EXPECT_NEAR(two.probability("01"), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(two.probability("11"), 2.0 / 3.0, 1e-12);
    EXPECT_EQ(two.probability("00"), 0.0);

    auto four = probabilities(parse_state("i*(1/2)|18> + i*(1/2)|50> + (1/2)|26> + (1/2)|19>", 6));
    ASSERT_EQ(four.probabilities().size(), 4U);
    for (const char* key : {"010010", "110010", "011010", "010011"}) EXPECT_NEAR(four.probability(key), 0.25, 1e-15);
    EXPECT_EQ(four.measured_qubits(), 6U);
}

TEST(PrefixDistribution, Examples) {
    const double r = 1.0 / std::sqrt(2.0);
    auto bell = prefix_distribution(QuantumState::from_amplitudes({r, 0.0, 0.0, r}), 1);
    EXPECT_NEAR(bell.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(bell.probability("1"), 0.5, 1e-15);

    auto det = prefix_distribution(basis_state("01"), 1);
    EXPECT_EQ(det.probabilities(), (OutcomeDistribution::Table{{"0", 1.0}}));

    EXPECT_THROW(prefix_distribution(basis_state("01"), 0), invalid_input);
    EXPECT_THROW(prefix_distribution(basis_state("01"), 3), invalid_input);
}

TEST(PrefixDistribution, Properties) {
    testkit::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + trial % 6;
        auto s = testkit::random_sparse_state(n, 0.6, rng);
        auto full = probabilities(s);
        EXPECT_NEAR(total(full), 1.0, 1e-12);
        EXPECT_EQ(prefix_distribution(s, n), full);
        for (unsigned m = 1; m <= n; ++m) EXPECT_NEAR(total(prefix_distribution(s, m)), 1.0, 1e-12);
    }
}

TEST(PrefixDistribution, ProductMarginalMatchesFirstFactor) {
    testkit::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned m = 1 + trial % 3;
        const unsigned n = 1 + (trial / 3) % 3;
        auto a = testkit::random_state(m, rng);
        auto b = testkit::random_state(n, rng);
        auto marginal = prefix_distribution(tensor_states(a, b), m);
        auto ref = probabilities(a);
        ASSERT_EQ(marginal.probabilities().size(), ref.probabilities().size());
        for (const auto& [k, p] : ref.probabilities()) EXPECT_NEAR(marginal.probability(k), p, 1e-12);
    }
}

TEST(OutcomeDistributionType, Validation) {
    EXPECT_THROW(OutcomeDistribution::from_probabilities(1, {{"0", 0.5}}), norm_violation);
    EXPECT_THROW(OutcomeDistribution::from_probabilities(1, {{"00", 1.0}}), invalid_input);
    EXPECT_THROW(OutcomeDistribution::from_probabilities(1, {{"0", 1.5}, {"1", -0.5}}), invalid_input);
    EXPECT_NO_THROW(OutcomeDistribution::from_probabilities(1, {{"0", 0.25}, {"1", 0.75}}));
}

TEST(Sample, PointMass) {
    auto rec = sample(probabilities(basis_state("0")), 100, 1);
    EXPECT_EQ(rec.counts, (std::map<std::string, std::uint64_t>{{"0", 100}}));
    EXPECT_EQ(rec.shots, 100U);
    EXPECT_EQ(rec.engine, "mt19937_64");
    EXPECT_THROW(sample(probabilities(basis_state("0")), 0, 1), invalid_input);
}

TEST(Sample, FairCoinWithinThreeSigma) {
    auto coin = OutcomeDistribution::from_probabilities(1, {{"0", 0.5}, {"1", 0.5}});
    auto rec = sample(coin, 100000, 42);
    const double bound = 3.0 * std::sqrt(100000 * 0.25);
    EXPECT_LE(std::abs(static_cast<double>(rec.counts["0"]) - 50000.0), bound);
    EXPECT_EQ(rec.counts["0"] + rec.counts["1"], 100000U);
}

TEST(Sample, DeterministicForFixedSeed) {
    auto coin = OutcomeDistribution::from_probabilities(1, {{"0", 0.5}, {"1", 0.5}});
    EXPECT_EQ(sample(coin, 1000, 42).counts, sample(coin, 1000, 42).counts);
    EXPECT_NE(sample(coin, 1000, 42).counts, sample(coin, 1000, 43).counts);
}

TEST(Sample, FrequenciesWithinFiveSigma) {
    testkit::Rng rng(555);
    const std::uint64_t shots = 100000;
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + trial % 3;  // at most 8 outcomes
        auto dist = probabilities(testkit::random_state(n, rng));
        auto rec = sample(dist, shots, 1000 + trial);
        std::uint64_t sum = 0;
        for (const auto& [k, c] : rec.counts) sum += c;
        EXPECT_EQ(sum, shots);
        for (const auto& [k, p] : dist.probabilities()) {
            const double sigma = std::sqrt(shots * p * (1.0 - p));
            const double observed = rec.counts.count(k) ? static_cast<double>(rec.counts.at(k)) : 0.0;
            EXPECT_LE(std::abs(observed - shots * p), 5.0 * sigma + 1.0) << k;
        }
    }
}
