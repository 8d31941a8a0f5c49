#include "pcc/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/log1p.hpp>

#include "pcc/errors.hpp"

namespace pcc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError(std::string(what) + " must lie in [0,1]");
}

void check_trials(int trials) {
    if (trials < 1)
        throw DomainError("trials must be >= 1");
}

// exp(z) - 1 - z for |z| < 1.
double expm1mx(double z) {
    double term = z * z / 2.0;
    double sum = term;
    for (int k = 3; k < 40; ++k) {
        term *= z / k;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

// x ln(x/y) - x + y >= 0, accurate when x and y are close.
double kl_term(double x, double y) {
    if (x == 0.0)
        return y;
    if (y == 0.0)
        return kInf;
    const double t = (y - x) / x;
    if (std::abs(t) < 0.5)
        return -x * boost::math::log1pmx(t);
    return x * (std::log(x) - std::log(y)) - x + y;
}

// a x + (1-a) y - x^a y^(1-a) >= 0, accurate when x and y are close.
double amgm_gap(double alpha, double x, double y) {
    if (x == y)
        return 0.0;
    if (alpha == 0.5) {
        const double d = std::sqrt(x) - std::sqrt(y);
        return 0.5 * d * d;
    }
    if (x == 0.0)
        return (1.0 - alpha) * y;
    if (y == 0.0)
        return alpha * x;
    const double t = (x - y) / y;
    if (std::abs(t) < 0.5) {
        const double u = std::log1p(t);
        return y * (alpha * expm1mx(u) - expm1mx(alpha * u));
    }
    return alpha * x + (1.0 - alpha) * y -
           std::exp(alpha * std::log(x) + (1.0 - alpha) * std::log(y));
}

}  // namespace

BetaTriple BetaTriple::from_exponents(double chernoff, double kl_on_off, double kl_off_on) {
    BetaTriple t;
    t.chernoff = chernoff;
    t.kl_on_off = kl_on_off;
    t.kl_off_on = kl_off_on;
    t.beta = std::exp(-chernoff);
    t.beta1 = std::exp(-kl_on_off);
    t.beta2 = std::exp(-kl_off_on);
    return t;
}

BetaTriple BetaTriple::from_values(double beta, double beta1, double beta2) {
    for (double b : {beta, beta1, beta2})
        if (!(b >= 0.0 && b <= 1.0))
            throw DomainError("beta values must lie in [0,1]");
    BetaTriple t;
    t.beta = beta;
    t.beta1 = beta1;
    t.beta2 = beta2;
    t.chernoff = -std::log(beta);
    t.kl_on_off = -std::log(beta1);
    t.kl_off_on = -std::log(beta2);
    return t;
}

double kl_binomial(double p_from, double q_from, double p_to, double q_to, int trials) {
    check_prob(p_from, "p_from");
    check_prob(p_to, "p_to");
    check_prob(q_from, "1-p_from");
    check_prob(q_to, "1-p_to");
    check_trials(trials);
    if (p_from == p_to && q_from == q_to)
        return 0.0;
    const double d = kl_term(p_from, p_to) + kl_term(q_from, q_to);
    return trials * std::max(d, 0.0);
}

double kl_binomial(double p_from, double p_to, int trials) {
    return kl_binomial(p_from, 1.0 - p_from, p_to, 1.0 - p_to, trials);
}

double chernoff_binomial(double alpha, double p_a, double q_a, double p_b, double q_b,
                         int trials) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in [0,1]");
    check_prob(p_a, "p_a");
    check_prob(p_b, "p_b");
    check_prob(q_a, "1-p_a");
    check_prob(q_b, "1-p_b");
    check_trials(trials);
    if (alpha == 0.0 || alpha == 1.0)
        return 0.0;
    const double gap = amgm_gap(alpha, p_a, p_b) + amgm_gap(alpha, q_a, q_b);
    if (gap < 0.5)
        return -trials * std::log1p(-std::max(gap, 0.0));
    const double s = std::pow(p_a, alpha) * std::pow(p_b, 1.0 - alpha) +
                     std::pow(q_a, alpha) * std::pow(q_b, 1.0 - alpha);
    return -trials * std::log(s);
}

double chernoff_binomial(double alpha, double p_a, double p_b, int trials) {
    return chernoff_binomial(alpha, p_a, 1.0 - p_a, p_b, 1.0 - p_b, trials);
}

BetaTriple beta_triple(const BinaryDetectionProbs& probs, int trials) {
    probs.validate();
    const auto& pr = probs;
    const double c = chernoff_binomial(0.5, pr.p_on, pr.q_on, pr.p_off, pr.q_off, trials);
    const double k10 = kl_binomial(pr.p_on, pr.q_on, pr.p_off, pr.q_off, trials);
    const double k01 = kl_binomial(pr.p_off, pr.q_off, pr.p_on, pr.q_on, trials);
    return BetaTriple::from_exponents(c, k10, k01);
}

AlphaSearch optimal_alpha_grid(const BinaryDetectionProbs& probs, int trials, int grid_size) {
    if (grid_size < 3)
        throw DomainError("grid_size must be >= 3");
    probs.validate();
    if (probs.p_off == probs.p_on)
        return {0.5, 0.0};
    const auto& pr = probs;
    AlphaSearch best{0.0, -kInf};
    for (int k = 0; k < grid_size; ++k) {
        const double a = static_cast<double>(k) / (grid_size - 1);
        const double c10 = chernoff_binomial(a, pr.p_on, pr.q_on, pr.p_off, pr.q_off, trials);
        const double c01 = chernoff_binomial(a, pr.p_off, pr.q_off, pr.p_on, pr.q_on, trials);
        const double v = std::min(c10, c01);
        if (v > best.value)
            best = {a, v};
    }
    return best;
}

double alpha_stationary_point(const BinaryDetectionProbs& probs, int trials) {
    check_trials(trials);
    probs.validate();
    const double p0 = probs.p_off, p1 = probs.p_on;
    const double q0 = probs.q_off, q1 = probs.q_on;
    if (!(p0 > 0.0 && p0 < p1 && q1 > 0.0))
        throw DomainError("alpha_stationary_point requires 0 < p0 < p1 < 1");
    const double log_p = std::log(p1) - std::log(p0);  // ln(p1/p0) > 0
    const double log_q = std::log(q0) - std::log(q1);  // ln((1-p0)/(1-p1)) > 0
    return (std::log(q0) - std::log(p0) + std::log(log_q) - std::log(log_p)) /
           (log_p + log_q);
}

}  // namespace pcc
