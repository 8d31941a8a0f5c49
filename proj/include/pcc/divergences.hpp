#pragma once

#include "pcc/channel_model.hpp"

namespace pcc {

// Exponentiated divergences between Bin(L,p1) and Bin(L,p0):
//   beta  = exp(-C_{1/2}(P1||P0)), beta1 = exp(-KL(P1||P0)), beta2 = exp(-KL(P0||P1)).
// The exponents are kept alongside the values so that 1 - beta and differences
// such as beta1 - beta stay accurate when all three are close to 1.
struct BetaTriple {
    double beta = 1.0;
    double beta1 = 1.0;
    double beta2 = 1.0;
    double chernoff = 0.0;   // -ln beta
    double kl_on_off = 0.0;  // -ln beta1, may be +inf
    double kl_off_on = 0.0;  // -ln beta2, may be +inf

    static BetaTriple from_exponents(double chernoff, double kl_on_off, double kl_off_on);
    static BetaTriple from_values(double beta, double beta1, double beta2);
};

// L * KL(Bernoulli(p_from) || Bernoulli(p_to)) in nats; +inf on support mismatch.
double kl_binomial(double p_from, double p_to, int trials);

// Same, with the complements supplied explicitly.
double kl_binomial(double p_from, double q_from, double p_to, double q_to, int trials);

// -L ln(p_a^a p_b^(1-a) + (1-p_a)^a (1-p_b)^(1-a)).
double chernoff_binomial(double alpha, double p_a, double p_b, int trials);
double chernoff_binomial(double alpha, double p_a, double q_a, double p_b, double q_b,
                         int trials);

BetaTriple beta_triple(const BinaryDetectionProbs& probs, int trials);

struct AlphaSearch {
    double alpha = 0.5;
    double value = 0.0;
};

// Grid maximization over alpha in [0,1] of min{C_a(P1||P0), C_a(P0||P1)}.
AlphaSearch optimal_alpha_grid(const BinaryDetectionProbs& probs, int trials, int grid_size);

// Closed-form stationary point of alpha -> C_alpha(P1||P0). Requires 0 < p0 < p1 < 1.
double alpha_stationary_point(const BinaryDetectionProbs& probs, int trials);

}  // namespace pcc
