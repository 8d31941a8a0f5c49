#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "pcc/channel_model.hpp"
#include "pcc/errors.hpp"
#include "pcc/mutual_info.hpp"

using namespace pcc;

TEST(BinaryEntropy, Values) {
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-16);
    EXPECT_NEAR(binary_entropy(0.25), 0.56233514461880835029, 2e-16);
    EXPECT_THROW(binary_entropy(1.1), DomainError);
}

TEST(LogBinomialPmf, ExactRationalOracle) {
    // C(200,60) 0.3^60 0.7^140 from exact rational arithmetic.
    EXPECT_NEAR(std::exp(log_binomial_pmf(200, 0.3, 60)), 0.061461716794769293913, 1e-14);
    EXPECT_EQ(log_binomial_pmf(10, 0.0, 0), 0.0);
    EXPECT_EQ(log_binomial_pmf(10, 1.0, 10), 0.0);
    EXPECT_TRUE(std::isinf(log_binomial_pmf(10, 0.0, 3)));
    EXPECT_THROW(log_binomial_pmf(10, 0.5, 11), DomainError);
}

TEST(LogBinomialPmf, VectorSumsToOne) {
    for (int n : {1, 30, 1500})
        for (double p : {0.0, 1e-4, 0.4, 1.0}) {
            const auto v = log_binomial_pmf_vector(n, p, 1.0 - p);
            double s = 0.0;
            for (double l : v)
                s += std::exp(l);
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    EXPECT_THROW(log_binomial_pmf_vector(kMaxExactTrials + 1, 0.5, 0.5), DomainError);
}

TEST(BinomialEntropy, HighPrecisionValues) {
    EXPECT_NEAR(binomial_entropy(50, 0.3), 2.59325470618927404, 1e-13);
    EXPECT_NEAR(binomial_entropy(500, 0.3), 3.7457907792505461179, 1e-12);
    EXPECT_NEAR(binomial_entropy(5000, 0.3), 4.8971985469807514852, 1e-11);
}

TEST(BinomialEntropy, GaussianApproximationErrorShrinksLikeOneOverL) {
    double prev = 0.0;
    for (int n : {50, 500, 5000}) {
        const double err = std::abs(binomial_entropy(n, 0.3) - binomial_entropy_gaussian_approx(n, 0.3));
        EXPECT_LT(err * n, 1.0);
        if (prev > 0.0)
            EXPECT_NEAR(prev / err, 10.0, 1.5);
        prev = err;
    }
}

TEST(MixturePmf, SumsToOne) {
    const BinaryDetectionProbs pr(0.02, 0.6);
    for (double mu : {0.0, 0.3, 1.0}) {
        const auto q = mixture_pmf(mu, pr, 40);
        EXPECT_NEAR(std::accumulate(q.begin(), q.end(), 0.0), 1.0, 1e-12);
    }
}

TEST(MiBinomialMixture, HighPrecisionValues) {
    EXPECT_NEAR(mi_binomial_mixture(0.5, BinaryDetectionProbs(0.0198, 0.181), 30),
                0.56893182406906666444, 1e-14);
    // Nearly identical laws: the value is small and must keep its relative accuracy.
    EXPECT_NEAR(mi_binomial_mixture(0.3, BinaryDetectionProbs(1e-4, 1.3e-4), 7) / 5.8724921328828067498e-6,
                1.0, 1e-9);
}

TEST(MiBinomialMixture, Degenerate) {
    const BinaryDetectionProbs pr(0.1, 0.7);
    EXPECT_EQ(mi_binomial_mixture(0.0, pr, 10), 0.0);
    EXPECT_EQ(mi_binomial_mixture(1.0, pr, 10), 0.0);
    EXPECT_EQ(mi_binomial_mixture(0.4, BinaryDetectionProbs(0.3, 0.3), 10), 0.0);
    // Perfectly distinguishable inputs carry h_b(mu).
    EXPECT_NEAR(mi_binomial_mixture(0.3, BinaryDetectionProbs(0.0, 1.0), 4), binary_entropy(0.3), 1e-15);
    EXPECT_THROW(mi_binomial_mixture(-0.1, pr, 10), DomainError);
}

TEST(MiBinomialMixture, ConcaveInMu) {
    const BinaryDetectionProbs pr(0.0004, 0.18);
    const double h = 1e-3;
    for (double mu = h; mu < 1.0 - h; mu += 0.01) {
        const double d2 = mi_binomial_mixture(mu - h, pr, 30) - 2 * mi_binomial_mixture(mu, pr, 30) +
                          mi_binomial_mixture(mu + h, pr, 30);
        EXPECT_LE(d2, 1e-9);
    }
}

TEST(MiBinomialMixture, SwapSymmetry) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double p0 = u(rng), p1 = u(rng), mu = u(rng);
        const int L = 1 + static_cast<int>(u(rng) * 50);
        EXPECT_NEAR(mi_binomial_mixture(mu, BinaryDetectionProbs(p0, p1), L),
                    mi_binomial_mixture(1 - mu, BinaryDetectionProbs(p1, p0), L), 1e-12);
    }
}

TEST(MiBinomialMixture, DominatedByPoissonBenchmark) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const int L = 1 + static_cast<int>(u(rng) * 60);
        const double tau = (0.01 + 0.99 * u(rng)) / L;
        const auto params = ChannelParams::normalized(10 * u(rng), u(rng), tau, L);
        const double mu = u(rng);
        const double T = params.symbol_duration();
        const double bench = mi_discrete_poisson(mu, params.background_rate * T,
                                                 (params.peak_rate + params.background_rate) * T);
        EXPECT_LE(mi_binomial_mixture(mu, symbol_probs(params), L), bench + 1e-12);
    }
}

TEST(MiMaxBruteforce, SymmetricChannelPeaksAtHalf) {
    const auto m = mi_max_bruteforce(BinaryDetectionProbs(0.2, 0.8), 9);
    EXPECT_NEAR(m.mu, 0.5, 1e-8);
    EXPECT_EQ(mi_max_bruteforce(BinaryDetectionProbs(0.2, 0.2), 9).i_max, 0.0);
    const auto z = mi_max_bruteforce(BinaryDetectionProbs(0.0, 1.0), 3);
    EXPECT_NEAR(z.i_max, std::log(2.0), 1e-14);
}

TEST(MiDiscretePoisson, HighPrecisionValue) {
    EXPECT_NEAR(mi_discrete_poisson(0.5, 0.02, 10.02), 0.69148639045492307122, 1e-13);
    EXPECT_EQ(mi_discrete_poisson(0.5, 1.0, 1.0), 0.0);
    EXPECT_NEAR(mi_discrete_poisson(0.5, 0.0, 60.0), std::log(2.0), 1e-13);
    EXPECT_THROW(mi_discrete_poisson(0.5, -1.0, 1.0), DomainError);
}

TEST(MiBinomialMixture, TinyMissProbabilityWithoutBackground) {
    // p1 rounds to 1 while 1 - p1 = e^-40 is carried separately; the on/off
    // outputs are then almost perfectly separable.
    const BinaryDetectionProbs pr(0.0, -std::expm1(-40.0), 1.0, std::exp(-40.0));
    for (int L : {1, 2, 30})
        EXPECT_NEAR(mi_binomial_mixture(0.5, pr, L), std::numbers::ln2, 1e-15) << L;
}
