#pragma once

#include <span>

#include "pcc/divergences.hpp"
#include "pcc/optimize.hpp"

namespace pcc {

// Regime thresholds used by automated checks.
inline constexpr double kLargeAThreshold = 3.0;        // A*tau >= 3
inline constexpr double kLowAThreshold = 1e-2;         // A*tau <= 1e-2
inline constexpr double kLowBackgroundThreshold = 1e-3;  // Lambda0*tau <= 1e-3

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

// Large-L behaviour of I_max: lower ln2 - beta; upper ln2 - beta1 when
// beta1 = beta2, otherwise ln2 + max(beta1, beta2)/2.
Interval imax_asymptote_large_L(const BetaTriple& t);

struct BetaExpansion {
    double beta = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
};

// First-order expansions of beta, beta1, beta2 in (1 - p1) as p1 -> 1.
// The BinaryDetectionProbs overloads take 1 - p1 from the stored complement,
// which keeps the small-(1 - p1) terms accurate at large A*tau.
BetaExpansion expansions_large_A(double p0, double p1, int trials);
BetaExpansion expansions_large_A(const BinaryDetectionProbs& probs, int trials);

// Large-A bounds on I_max.
Interval imax_bounds_large_A(double p0, double p1, int trials);
Interval imax_bounds_large_A(const BinaryDetectionProbs& probs, int trials);

// -ln(sqrt(p0 p1) + sqrt((1-p0)(1-p1))).
double exp_rate_large_L(double p0, double p1);

struct GapOffsets {
    double epsilon_u = 0.0;
    double epsilon_l = 0.0;
};

// Offsets of the gap bounds for large A, three branches keyed on (1-p0)L vs 1/2.
GapOffsets gap_offsets_large_A(double p0, double p1, int trials);
GapOffsets gap_offsets_large_A(const BinaryDetectionProbs& probs, int trials);

// Offsets for weak background light, three branches keyed on p1 L vs 1/2.
GapOffsets gap_offsets_low_background(double p0, double p1, int trials);
GapOffsets gap_offsets_low_background(const BinaryDetectionProbs& probs, int trials);

// A -> infinity limits of the gap bounds: ln(1+p0^(L/2)) - ln(1+p0^L)/2 and 2p0^(L/2) - p0^L.
Interval gap_limits_large_A(double p0, int trials);

// Lambda0 -> 0 limits: the same expressions in (1 - p1).
Interval gap_limits_low_background(double p1, int trials);

// Decay rate L*tau/2 of the gap in A when Lambda0 = 0.
double exp_rate_zero_background(int trials, double dead_time);

// 3 L (1-p0) tau^2 / (16 p0), the low-A coefficient of the gap in A^2.
double gap_quadratic_coeff_low_A(double p0, int trials, double dead_time);

// Least-squares slope of ln(value) against x.
double estimate_exponential_rate(std::span<const XY> points);

}  // namespace pcc
