#pragma once

#include <cstdint>
#include <vector>

#include "pcc/channel_model.hpp"

namespace pcc {

struct SimConfig {
    ChannelParams params;
    std::int64_t symbols = 1;
    std::uint64_t seed = 0;
    double duty_cycle = 0.5;  // P(X = 1)

    void validate() const;
};

// SplitMix64 output sequence started from a key derived from (seed, stream).
// Every symbol index gets its own stream, so results do not depend on how the
// symbol range is split across threads.
class SymbolRng {
public:
    SymbolRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // Uniform on [0,1) with 53 random bits.
    double uniform();
    // Exponential with the given rate (> 0).
    double exponential(double rate);

private:
    std::uint64_t state_;
};

enum class SimPath {
    Bernoulli,  // one Bernoulli(1 - exp(-rate*tau)) draw per sampling window
    Arrivals,   // Poisson arrival times marked into the windows that contain them
};

// Indicator samples Z_1..Z_L for one symbol.
std::vector<std::uint8_t> simulate_symbol(int bit, const ChannelParams& params, SymbolRng& rng,
                                          SimPath path = SimPath::Bernoulli);

// Aggregated results of a run.
struct SimCounts {
    int trials = 0;                                // L
    std::int64_t symbols[2] = {0, 0};              // per input value
    std::int64_t detections[2] = {0, 0};           // sum of Z over windows
    std::int64_t adjacent_ones[2] = {0, 0};        // count of Z_i = Z_{i+1} = 1
    std::vector<std::int64_t> histogram[2];        // counts of N-hat = k

    void merge(const SimCounts& other);
};

// Simulates symbol indices [first, last) of the run described by cfg.
SimCounts simulate_range(const SimConfig& cfg, std::int64_t first, std::int64_t last,
                         SimPath path = SimPath::Bernoulli, unsigned threads = 0);

SimCounts simulate(const SimConfig& cfg, SimPath path = SimPath::Bernoulli, unsigned threads = 0);

struct DetectionEstimate {
    double p0_hat = 0.0;
    double p0_stderr = 0.0;
    double p1_hat = 0.0;
    double p1_stderr = 0.0;
};

DetectionEstimate detection_estimate(const SimCounts& counts);
DetectionEstimate estimate_detection_probs(const SimConfig& cfg);

// Plug-in mutual information of the empirical (X, N-hat) histogram, nats.
double plugin_mi(const SimCounts& counts);
double estimate_mi_plugin(const SimConfig& cfg);

struct BootstrapResult {
    double mean = 0.0;
    double std_error = 0.0;
};

// Multinomial resampling of the joint histogram.
BootstrapResult bootstrap_plugin_mi(const SimCounts& counts, int replicates, std::uint64_t seed,
                                    unsigned threads = 0);

// Chi-square homogeneity test of the per-window detection frequencies of two runs,
// one 2x2 table per input class; returns the p-value.
double window_homogeneity_pvalue(const SimCounts& a, const SimCounts& b);

// z-score of the correlation between adjacent windows within symbols of class x.
double adjacent_correlation_z(const SimCounts& counts, int x);

}  // namespace pcc
