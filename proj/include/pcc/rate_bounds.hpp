#pragma once

#include <optional>

#include "pcc/channel_model.hpp"
#include "pcc/divergences.hpp"

namespace pcc {

struct RateBoundSet {
    double exact_mi = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> approx;
    double gap = 0.0;
    double mu = 0.5;
};

// F_l(mu, beta) = -{mu ln[(1-mu)beta + mu] + (1-mu) ln[mu beta + 1 - mu]}.
double lower_envelope(double mu, double beta);

// F_u(mu, beta1, beta2), same form with beta1 in the first term and beta2 in the second.
double upper_envelope(double mu, double beta1, double beta2);

// Envelopes evaluated from the divergence exponents held in a BetaTriple.
double lower_envelope(double mu, const BetaTriple& t);
double upper_envelope(double mu, const BetaTriple& t);

// Pairwise-distance lower bound with Chernoff order alpha (alpha = 1/2 gives F_l).
double lower_envelope_alpha(double mu, const BinaryDetectionProbs& probs, int trials,
                            double alpha);

// The same bound maximized over alpha in [0,1].
double lower_envelope_best_alpha(double mu, const BinaryDetectionProbs& probs, int trials);

// -ln((1+beta)/2), the maximum of F_l over mu.
double lower_bound_max(double beta);
double lower_bound_max(const BetaTriple& t);

// Closed-form upper bound on max_mu F_u.
double upper_bound_max(double beta1, double beta2);
double upper_bound_max(const BetaTriple& t);

// Maximizer of F_u over mu, found from the sign change of dF_u/dmu.
double optimal_prior_upper(double beta1, double beta2, double tol = 1e-10);
double optimal_prior_upper(const BetaTriple& t, double tol = 1e-10);

// F_u(mu) - F_l(mu) evaluated without cancellation.
double envelope_difference(double mu, const BetaTriple& t);

struct GapResult {
    double gap = 0.0;                   // max_mu [F_u - F_l]
    double mu = 0.5;                    // where that maximum is attained
    double difference_of_maxima = 0.0;  // max F_u - max F_l
};

double bound_gap(const BetaTriple& t, double tol = 1e-10);
GapResult bound_gap_detail(const BetaTriple& t, double tol = 1e-10);

struct GapBounds {
    double low_snr_upper = 0.0;
    double high_snr_upper = 0.0;
    double general_lower = 0.0;
};

GapBounds gap_bounds(const BetaTriple& t);

RateBoundSet rate_bound_set(const ChannelParams& params, double mu);

}  // namespace pcc
