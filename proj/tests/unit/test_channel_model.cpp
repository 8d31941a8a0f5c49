#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "pcc/channel_model.hpp"
#include "pcc/errors.hpp"

using namespace pcc;

TEST(DetectionProb, ZeroRateIsZero) {
    EXPECT_EQ(detection_prob(0.0, 0.3), 0.0);
    EXPECT_EQ(miss_prob(0.0, 0.3), 1.0);
}

TEST(DetectionProb, MatchesHighPrecisionValue) {
    // 1 - exp(-0.02) to 20 digits.
    EXPECT_NEAR(detection_prob(0.02, 1.0), 0.019801326693244697779, 1e-17);
}

TEST(DetectionProb, TinyArgumentKeepsRelativeAccuracy) {
    const double p = detection_prob(1e-12, 1.0);
    EXPECT_NEAR(p / 1e-12, 1.0 - 0.5e-12, 1e-15);
}

TEST(DetectionProb, InfiniteRateSaturates) {
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(detection_prob(inf, 0.1), 1.0);
    EXPECT_EQ(miss_prob(inf, 0.1), 0.0);
}

TEST(DetectionProb, RejectsBadArguments) {
    EXPECT_THROW(detection_prob(-1.0, 0.1), DomainError);
    EXPECT_THROW(detection_prob(1.0, 0.0), DomainError);
    EXPECT_THROW(miss_prob(1.0, -0.1), DomainError);
}

TEST(DetectionProb, MonotoneInRateAndDeadTime) {
    double prev = 0.0;
    for (double r = 0.01; r < 100.0; r *= 1.7) {
        const double p = detection_prob(r, 0.05);
        EXPECT_GT(p, prev);
        prev = p;
    }
    prev = 0.0;
    for (double tau = 0.001; tau < 10.0; tau *= 1.7) {
        const double p = detection_prob(2.0, tau);
        EXPECT_GT(p, prev);
        prev = p;
    }
}

TEST(DetectionProb, ComplementIdentity) {
    for (double x : {1e-9, 1e-4, 0.3, 2.0, 30.0}) {
        EXPECT_NEAR(detection_prob(x, 1.0) + miss_prob(x, 1.0), 1.0, 1e-15);
    }
}

TEST(SymbolProbs, DefaultExperimentPoint) {
    const auto pr = symbol_probs(ChannelParams::normalized(10.0, 0.02, 0.02, 30));
    EXPECT_NEAR(pr.p_off, 0.00039992001066560008533, 1e-19);
    EXPECT_NEAR(pr.p_on, 0.18159667373352134262, 1e-16);
    EXPECT_NEAR(pr.q_off, 1.0 - pr.p_off, 1e-16);
    EXPECT_NEAR(pr.q_on, 1.0 - pr.p_on, 1e-16);
}

TEST(SymbolProbs, OnProbabilityIsNeverBelowOff) {
    for (double A : {0.0, 1e-3, 1.0, 50.0})
        for (double lam : {0.0, 0.5, 3.0}) {
            const auto pr = symbol_probs(ChannelParams::normalized(A, lam, 0.01, 20));
            EXPECT_GE(pr.p_on, pr.p_off);
        }
}

TEST(SymbolProbs, ComplementSurvivesLargePeakRate) {
    ChannelParams p;
    p.peak_rate = 100.0;
    p.dead_time = 1.0;
    const auto pr = symbol_probs(p);
    EXPECT_EQ(pr.p_on, 1.0);
    EXPECT_NEAR(pr.q_on / std::exp(-100.0), 1.0, 1e-14);
}

TEST(ChannelParams, Validation) {
    ChannelParams p;
    p.peak_rate = 1.0;
    EXPECT_NO_THROW(p.validate());
    p.peak_rate = -1.0;
    EXPECT_THROW(p.validate(), DomainError);
    p.peak_rate = 1.0;
    p.background_rate = -0.1;
    EXPECT_THROW(p.validate(), DomainError);
    p.background_rate = 0.0;
    p.dead_time = 0.0;
    EXPECT_THROW(p.validate(), DomainError);
    p.dead_time = 2.0;
    EXPECT_THROW(p.validate(), DomainError);  // T_s < tau
    p.dead_time = 1.0;
    p.samples_per_symbol = 0;
    EXPECT_THROW(p.validate(), DomainError);
}

TEST(ChannelParams, NormalizedUsesUnitSymbol) {
    const auto p = ChannelParams::normalized(10.0, 0.02, 0.02, 30);
    EXPECT_DOUBLE_EQ(p.symbol_duration(), 1.0);
    EXPECT_DOUBLE_EQ(p.sampling_interval, 1.0 / 30.0);
    EXPECT_THROW(ChannelParams::normalized(1.0, 0.0, 0.1, 0), DomainError);
}

TEST(BinaryDetectionProbs, Validation) {
    EXPECT_NO_THROW(BinaryDetectionProbs(0.1, 0.9).validate());
    EXPECT_THROW(BinaryDetectionProbs(-0.1, 0.9).validate(), DomainError);
    EXPECT_THROW(BinaryDetectionProbs(0.1, 1.5).validate(), DomainError);
}

TEST(DetectionProb, CompositionIdentity) {
    for (double x1 : {0.0, 1e-6, 0.01, 0.7, 3.0})
        for (double x2 : {0.0, 1e-5, 0.2, 1.5, 8.0}) {
            const double lhs = detection_prob(x1 + x2, 1.0);
            const double rhs = detection_prob(x2, 1.0) + miss_prob(x2, 1.0) * detection_prob(x1, 1.0);
            EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(lhs, 1e-300));
        }
}

TEST(SymbolProbs, EqualOnlyWithoutPeakRate) {
    const auto same = symbol_probs(ChannelParams::normalized(0.0, 0.4, 0.01, 20));
    EXPECT_EQ(same.p_on, same.p_off);
    const auto diff = symbol_probs(ChannelParams::normalized(1e-6, 0.4, 0.01, 20));
    EXPECT_GT(diff.p_on, diff.p_off);
}
