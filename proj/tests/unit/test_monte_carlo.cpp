#include <cmath>

#include <gtest/gtest.h>

#include "pcc/channel_model.hpp"
#include "pcc/errors.hpp"
#include "pcc/monte_carlo.hpp"
#include "pcc/mutual_info.hpp"

using namespace pcc;

namespace {

SimConfig default_config(std::int64_t symbols, std::uint64_t seed = 2024) {
    SimConfig cfg;
    cfg.params = ChannelParams::normalized(10.0, 0.02, 0.02, 30);
    cfg.symbols = symbols;
    cfg.seed = seed;
    cfg.duty_cycle = 0.5;
    return cfg;
}

bool same_counts(const SimCounts& a, const SimCounts& b) {
    for (int x = 0; x < 2; ++x)
        if (a.symbols[x] != b.symbols[x] || a.detections[x] != b.detections[x] ||
            a.adjacent_ones[x] != b.adjacent_ones[x] || a.histogram[x] != b.histogram[x])
            return false;
    return true;
}

}  // namespace

TEST(SymbolRng, KnownSequenceAndRanges) {
    SymbolRng a(1, 2), b(1, 2), c(1, 3);
    const auto first = a.next_u64();
    EXPECT_EQ(first, b.next_u64());
    EXPECT_NE(first, c.next_u64());
    for (int i = 0; i < 10000; ++i) {
        const double u = a.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_GE(a.exponential(3.0), 0.0);
    }
}

TEST(SimulateSymbol, DarkChannelIsSilent) {
    const auto p = ChannelParams::normalized(0.0, 0.0, 0.05, 12);
    for (auto path : {SimPath::Bernoulli, SimPath::Arrivals}) {
        SymbolRng rng(5, 0);
        for (int bit : {0, 1})
            for (auto z : simulate_symbol(bit, p, rng, path))
                EXPECT_EQ(z, 0);
    }
}

TEST(SimulateSymbol, SaturatedChannelFiresEveryWindow) {
    ChannelParams p;
    p.peak_rate = 1e12;
    p.dead_time = 0.1;
    p.sampling_interval = 0.1;
    p.samples_per_symbol = 16;
    for (auto path : {SimPath::Bernoulli, SimPath::Arrivals}) {
        SymbolRng rng(6, 0);
        for (auto z : simulate_symbol(1, p, rng, path))
            EXPECT_EQ(z, 1);
    }
    SymbolRng rng(6, 0);
    EXPECT_THROW(simulate_symbol(2, p, rng), DomainError);
}

TEST(Simulate, ReproducibleAndThreadInvariant) {
    const auto cfg = default_config(20000);
    for (auto path : {SimPath::Bernoulli, SimPath::Arrivals}) {
        const auto one = simulate(cfg, path, 1);
        const auto many = simulate(cfg, path, 4);
        const auto again = simulate(cfg, path, 1);
        EXPECT_TRUE(same_counts(one, many));
        EXPECT_TRUE(same_counts(one, again));
    }
    auto split = simulate_range(cfg, 0, 7000, SimPath::Bernoulli, 1);
    split.merge(simulate_range(cfg, 7000, 20000, SimPath::Bernoulli, 1));
    EXPECT_TRUE(same_counts(split, simulate(cfg, SimPath::Bernoulli, 1)));
    const auto e1 = estimate_detection_probs(cfg);
    const auto e2 = estimate_detection_probs(cfg);
    EXPECT_EQ(e1.p0_hat, e2.p0_hat);
    EXPECT_EQ(e1.p1_hat, e2.p1_hat);
}

TEST(Simulate, WindowFrequenciesMatchClosedForm) {
    const auto cfg = default_config(1000000);
    const auto pr = symbol_probs(cfg.params);
    for (auto path : {SimPath::Bernoulli, SimPath::Arrivals}) {
        const auto e = detection_estimate(simulate(cfg, path));
        EXPECT_LT(std::abs(e.p0_hat - pr.p_off), 3 * e.p0_stderr);
        EXPECT_LT(std::abs(e.p1_hat - pr.p_on), 3 * e.p1_stderr);
    }
}

TEST(Simulate, PathsAreStatisticallyIndistinguishable) {
    auto cfg = default_config(1000000 / 30 + 1);
    cfg.params = ChannelParams::normalized(40.0, 5.0, 0.02, 30);
    const auto a = simulate(cfg, SimPath::Bernoulli);
    const auto b = simulate(cfg, SimPath::Arrivals);
    EXPECT_GT(window_homogeneity_pvalue(a, b), 0.001);
    EXPECT_NEAR(window_homogeneity_pvalue(a, a), 1.0, 1e-12);
}

TEST(Simulate, AdjacentWindowsUncorrelated) {
    auto cfg = default_config(200000);
    cfg.params = ChannelParams::normalized(40.0, 5.0, 0.02, 30);
    for (auto path : {SimPath::Bernoulli, SimPath::Arrivals}) {
        const auto c = simulate(cfg, path);
        EXPECT_LT(std::abs(adjacent_correlation_z(c, 0)), 3.0);
        EXPECT_LT(std::abs(adjacent_correlation_z(c, 1)), 3.0);
    }
}

TEST(Simulate, ContiguousWindowsAlsoIndependent) {
    // T_s = tau: windows tile the time axis with no gaps.
    SimConfig cfg;
    cfg.params.peak_rate = 3.0;
    cfg.params.background_rate = 1.0;
    cfg.params.dead_time = 0.25;
    cfg.params.sampling_interval = 0.25;
    cfg.params.samples_per_symbol = 20;
    cfg.symbols = 100000;
    cfg.seed = 77;
    const auto c = simulate(cfg, SimPath::Arrivals);
    EXPECT_LT(std::abs(adjacent_correlation_z(c, 0)), 3.0);
    EXPECT_LT(std::abs(adjacent_correlation_z(c, 1)), 3.0);
}

TEST(Estimators, ZeroPeakRateGivesEqualEstimates) {
    auto cfg = default_config(200000);
    cfg.params.peak_rate = 0.0;
    cfg.params.background_rate = 10.0;
    const auto e = estimate_detection_probs(cfg);
    EXPECT_LT(std::abs(e.p0_hat - e.p1_hat), 3 * std::hypot(e.p0_stderr, e.p1_stderr));
}

TEST(Estimators, PluginBiasShrinksWithSampleCount) {
    auto cfg = default_config(10000);
    cfg.params.peak_rate = 0.0;
    cfg.params.background_rate = 10.0;
    double prev = 1.0;
    for (std::int64_t n : {10000, 100000, 1000000}) {
        cfg.symbols = n;
        const double mi = estimate_mi_plugin(cfg);
        EXPECT_GE(mi, 0.0);
        EXPECT_LT(mi, prev);
        prev = mi;
    }
    EXPECT_LT(prev, 1e-4);
}

TEST(Estimators, PluginMatchesExactWithinBootstrapError) {
    const auto cfg = default_config(1000000);
    const auto counts = simulate(cfg);
    const double mi = plugin_mi(counts);
    const auto boot = bootstrap_plugin_mi(counts, 50, 9);
    const double exact = mi_binomial_mixture(0.5, symbol_probs(cfg.params), 30);
    EXPECT_LT(std::abs(mi - exact), 3 * boot.std_error);
    const auto again = bootstrap_plugin_mi(counts, 50, 9);
    EXPECT_EQ(boot.mean, again.mean);
    EXPECT_EQ(boot.std_error, again.std_error);
}

TEST(Estimators, DegenerateAndInsufficientInputs) {
    auto cfg = default_config(5000);
    cfg.duty_cycle = 0.0;
    EXPECT_EQ(estimate_mi_plugin(cfg), 0.0);
    EXPECT_THROW(estimate_detection_probs(cfg), EstimationError);
    cfg.duty_cycle = 0.5;
    cfg.symbols = 100;
    EXPECT_THROW(estimate_mi_plugin(cfg), EstimationError);
    cfg.symbols = 0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.symbols = 10;
    cfg.duty_cycle = 1.5;
    EXPECT_THROW(cfg.validate(), DomainError);
}
