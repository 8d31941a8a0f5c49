#pragma once

namespace pcc {

// Physical description of the dead-time photon-counting link.
//
// All quantities are dimensionful reals in one consistent time unit. The
// "normalized" setting used throughout the experiments takes the symbol
// duration T_b = samples_per_symbol * sampling_interval as the unit, so a
// dead time of 0.02 means 2% of a symbol.
struct ChannelParams {
    double peak_rate = 0.0;         // A
    double background_rate = 0.0;   // Lambda0
    double dead_time = 1.0;         // tau
    double sampling_interval = 1.0; // T_s
    int samples_per_symbol = 1;     // L

    // Throws DomainError if any invariant is violated.
    void validate() const;

    double symbol_duration() const { return samples_per_symbol * sampling_interval; }

    // Parameters for the T_b = 1 convention: T_s = 1/L.
    static ChannelParams normalized(double peak_rate, double background_rate,
                                    double dead_time, int samples_per_symbol);
};

// Per-sample detection probabilities under the off and on symbols.
// The complements q = 1 - p are carried separately: at large A*tau the miss
// probability exp(-(A+Lambda0)*tau) is far below the spacing of doubles near 1.
struct BinaryDetectionProbs {
    double p_off = 0.0;  // p0
    double p_on = 0.0;   // p1
    double q_off = 1.0;  // 1 - p0
    double q_on = 1.0;   // 1 - p1

    BinaryDetectionProbs() = default;
    BinaryDetectionProbs(double p0, double p1)
        : p_off(p0), p_on(p1), q_off(1.0 - p0), q_on(1.0 - p1) {}
    BinaryDetectionProbs(double p0, double p1, double q0, double q1)
        : p_off(p0), p_on(p1), q_off(q0), q_on(q1) {}

    // Throws DomainError unless both probabilities lie in [0,1].
    void validate() const;
};

// 1 - exp(-rate * dead_time).
double detection_prob(double rate, double dead_time);

// exp(-rate * dead_time), the complement of detection_prob.
double miss_prob(double rate, double dead_time);

BinaryDetectionProbs symbol_probs(const ChannelParams& params);

}  // namespace pcc
