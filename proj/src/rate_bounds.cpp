#include "pcc/rate_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcc/approximation.hpp"
#include "pcc/errors.hpp"
#include "pcc/mutual_info.hpp"
#include "pcc/optimize.hpp"

namespace pcc {
namespace {

void check_mu(double mu) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
}

void check_beta(double b) {
    if (!(b >= 0.0 && b <= 1.0))
        throw DomainError("beta values must lie in [0,1]");
}

// Envelope written with the complements c_i = 1 - beta_i.
double envelope(double mu, double c1, double c2) {
    if (mu == 0.0 || mu == 1.0)
        return 0.0;
    return -mu * std::log1p(-(1.0 - mu) * c1) - (1.0 - mu) * std::log1p(-mu * c2);
}

double complement(double exponent) { return -std::expm1(-exponent); }

// beta_i - beta from the exponents, for beta > 0.
double beta_excess(const BetaTriple& t, double exponent) {
    return t.beta * std::expm1(t.chernoff - exponent);
}

}  // namespace

double lower_envelope(double mu, double beta) {
    check_mu(mu);
    check_beta(beta);
    return envelope(mu, 1.0 - beta, 1.0 - beta);
}

double upper_envelope(double mu, double beta1, double beta2) {
    check_mu(mu);
    check_beta(beta1);
    check_beta(beta2);
    return envelope(mu, 1.0 - beta1, 1.0 - beta2);
}

double lower_envelope(double mu, const BetaTriple& t) {
    check_mu(mu);
    const double c = complement(t.chernoff);
    return envelope(mu, c, c);
}

double upper_envelope(double mu, const BetaTriple& t) {
    check_mu(mu);
    return envelope(mu, complement(t.kl_on_off), complement(t.kl_off_on));
}

double lower_envelope_alpha(double mu, const BinaryDetectionProbs& probs, int trials,
                            double alpha) {
    check_mu(mu);
    const auto& p = probs;
    const double c10 = chernoff_binomial(alpha, p.p_on, p.q_on, p.p_off, p.q_off, trials);
    const double c01 = chernoff_binomial(alpha, p.p_off, p.q_off, p.p_on, p.q_on, trials);
    return envelope(mu, complement(c10), complement(c01));
}

double lower_envelope_best_alpha(double mu, const BinaryDetectionProbs& probs, int trials) {
    check_mu(mu);
    if (mu == 0.0 || mu == 1.0)
        return 0.0;
    const auto best = maximize_scalar(
        [&](double a) { return lower_envelope_alpha(mu, probs, trials, a); }, 0.0, 1.0, 1e-9,
        129);
    return best.value;
}

double lower_bound_max(double beta) {
    check_beta(beta);
    return -std::log1p(-(1.0 - beta) / 2.0);
}

double lower_bound_max(const BetaTriple& t) {
    return -std::log1p(-complement(t.chernoff) / 2.0);
}

double upper_bound_max(double beta1, double beta2) {
    check_beta(beta1);
    check_beta(beta2);
    if (beta1 == 1.0 && beta2 == 1.0)
        throw DomainError("upper_bound_max: beta1 = beta2 = 1 is degenerate");
    const double lo = std::min(beta1, beta2);
    const double one_minus_prod = 1.0 - beta1 * beta2;
    return std::abs(beta1 - beta2) * (1.0 - lo) / one_minus_prod -
           std::log(one_minus_prod / (2.0 - beta1 - beta2));
}

double upper_bound_max(const BetaTriple& t) {
    if (t.kl_on_off == 0.0 && t.kl_off_on == 0.0)
        throw DomainError("upper_bound_max: beta1 = beta2 = 1 is degenerate");
    const double c1 = complement(t.kl_on_off);
    const double c2 = complement(t.kl_off_on);
    const double one_minus_prod = complement(t.kl_on_off + t.kl_off_on);
    const double diff = std::max(c1, c2) < 0.5 ? std::abs(c1 - c2) : std::abs(t.beta1 - t.beta2);
    return diff * std::max(c1, c2) / one_minus_prod - std::log(one_minus_prod / (c1 + c2));
}

double optimal_prior_upper(const BetaTriple& t, double tol) {
    if (!(tol > 0.0))
        throw DomainError("tol must be > 0");
    if (t.kl_on_off == 0.0 || t.kl_off_on == 0.0)
        throw DomainError("optimal_prior_upper requires beta1, beta2 < 1");
    const double c1 = complement(t.kl_on_off);
    const double c2 = complement(t.kl_off_on);
    // dF_u/dmu = ln(b/a) - mu c1/a + (1-mu) c2/b, a = 1-(1-mu)c1, b = 1-mu c2;
    // positive at 0, negative at 1 and decreasing in between.
    auto slope = [&](double mu) {
        const double a = 1.0 - (1.0 - mu) * c1;
        const double b = 1.0 - mu * c2;
        return std::log1p(-mu * c2) - std::log1p(-(1.0 - mu) * c1) - mu * c1 / a +
               (1.0 - mu) * c2 / b;
    };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double s = slope(mid);
        if (s == 0.0)
            return mid;
        if (std::isnan(s))
            throw NumericalError("optimal_prior_upper: non-finite derivative");
        (s > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double optimal_prior_upper(double beta1, double beta2, double tol) {
    if (!(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0))
        throw DomainError("optimal_prior_upper requires beta1, beta2 in [0,1)");
    return optimal_prior_upper(BetaTriple::from_values(std::max(beta1, beta2), beta1, beta2),
                               tol);
}

double envelope_difference(double mu, const BetaTriple& t) {
    check_mu(mu);
    if (mu == 0.0 || mu == 1.0 || t.beta == 0.0)
        return 0.0;
    const double cb = complement(t.chernoff);
    const double d1 = beta_excess(t, t.kl_on_off);  // beta1 - beta <= 0
    const double d2 = beta_excess(t, t.kl_off_on);  // beta2 - beta <= 0
    return -mu * std::log1p((1.0 - mu) * d1 / (1.0 - (1.0 - mu) * cb)) -
           (1.0 - mu) * std::log1p(mu * d2 / (1.0 - mu * cb));
}

GapResult bound_gap_detail(const BetaTriple& t, double tol) {
    if (!(tol > 0.0))
        throw DomainError("tol must be > 0");
    GapResult r;
    if (t.kl_on_off == t.chernoff && t.kl_off_on == t.chernoff)
        return r;
    const auto best =
        maximize_scalar([&](double mu) { return envelope_difference(mu, t); }, 0.0, 1.0, tol);
    r.gap = std::max(best.value, 0.0);
    r.mu = best.x;
    if (t.kl_on_off > 0.0 && t.kl_off_on > 0.0) {
        const double mu_u = optimal_prior_upper(t, tol);
        r.difference_of_maxima = upper_envelope(mu_u, t) - lower_bound_max(t);
    }
    return r;
}

double bound_gap(const BetaTriple& t, double tol) { return bound_gap_detail(t, tol).gap; }

GapBounds gap_bounds(const BetaTriple& t) {
    GapBounds g;
    auto low_term = [&](double exponent) {
        if (std::isinf(exponent))
            return std::numeric_limits<double>::infinity();
        const double r = std::expm1(exponent - t.chernoff);  // beta/beta_i - 1
        return r * (16.0 * (r + 1.0) + 11.0) / 108.0;
    };
    g.low_snr_upper = low_term(t.kl_on_off) + low_term(t.kl_off_on);
    if (t.beta > 0.0) {
        const double d1 = beta_excess(t, t.kl_on_off);
        const double d2 = beta_excess(t, t.kl_off_on);
        g.high_snr_upper = -d1 - d2;
        g.general_lower = -0.5 * std::log1p(d1 / (1.0 + t.beta)) -
                          0.5 * std::log1p(d2 / (1.0 + t.beta));
    }
    return g;
}

RateBoundSet rate_bound_set(const ChannelParams& params, double mu) {
    check_mu(mu);
    const auto probs = symbol_probs(params);
    const int L = params.samples_per_symbol;
    const auto t = beta_triple(probs, L);
    RateBoundSet r;
    r.mu = mu;
    r.exact_mi = mi_binomial_mixture(mu, probs, L);
    r.lower = lower_envelope(mu, t);
    r.upper = upper_envelope(mu, t);
    r.gap = bound_gap(t);
    if (approximation_valid(probs, L))
        r.approx = mi_approx_low_background(mu, probs, L);
    return r;
}

}  // namespace pcc
