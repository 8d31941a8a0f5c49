#pragma once

#include <vector>

#include "pcc/channel_model.hpp"

namespace pcc {

// Largest number of samples per symbol accepted by the exact summations.
inline constexpr int kMaxExactTrials = 100000;

// h_b(x) in nats.
double binary_entropy(double x);

// ln Bin(k; L, p). Returns -inf for impossible outcomes.
double log_binomial_pmf(int trials, double p, int k);

// Full log-pmf vector k = 0..L, using the supplied complement q = 1 - p.
std::vector<double> log_binomial_pmf_vector(int trials, double p, double q);

// Exact entropy of Bin(L, p) by summation.
double binomial_entropy(int trials, double p);

// (1/2) ln(2 pi e L p (1-p)).
double binomial_entropy_gaussian_approx(int trials, double p);

// pmf of the output count under the OOK prior mu.
std::vector<double> mixture_pmf(double mu, const BinaryDetectionProbs& probs, int trials);

// Exact I(X; N-hat) in nats for prior P(X=1) = mu.
double mi_binomial_mixture(double mu, const BinaryDetectionProbs& probs, int trials);

struct MiMax {
    double mu = 0.5;
    double i_max = 0.0;
};

MiMax mi_max_bruteforce(const BinaryDetectionProbs& probs, int trials, double tol = 1e-10);

// Binary input, Poisson(mean_off) / Poisson(mean_on) output.
double mi_discrete_poisson(double mu, double mean_off, double mean_on);

}  // namespace pcc
