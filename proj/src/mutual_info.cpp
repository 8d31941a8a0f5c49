#include "pcc/mutual_info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/distributions/poisson.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include "pcc/errors.hpp"
#include "pcc/optimize.hpp"

namespace pcc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_trials(int trials) {
    if (trials < 1)
        throw DomainError("trials must be >= 1");
    if (trials > kMaxExactTrials)
        throw DomainError("trials exceeds the exact-summation cap of 100000");
}

double log_choose(int n, int k) {
    if (n <= 1000) {
        return std::log(boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                                  static_cast<unsigned>(k)));
    }
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// k * ln(x) with 0 * ln(0) = 0.
double xlog(double k, double logx) { return k == 0.0 ? 0.0 : k * logx; }

// ln(1 - mu + mu e^d) for mu in (0,1).
double log_mix(double mu, double d) {
    if (d <= 1.0)
        return std::log1p(mu * std::expm1(d));
    return std::log(mu) + d + std::log1p((1.0 - mu) * std::exp(-d) / mu);
}

// ln(a/b) for a, b in [0,1], accurate when a and b are close.
double log_ratio(double a, double b) {
    if (a == b)
        return 0.0;
    if (b == 0.0)
        return kInf;
    if (a == 0.0)
        return -kInf;
    const double t = (a - b) / b;
    if (std::abs(t) < 0.5)
        return std::log1p(t);
    return std::log(a) - std::log(b);
}

// Mutual information of a binary input given per-outcome weights of the two
// conditional laws and the log-likelihood ratios d_k = ln(P1(k)/P0(k)).
double mi_from_llr(double mu, const std::vector<double>& w0, const std::vector<double>& w1,
                   const std::vector<double>& llr) {
    if (mu <= 0.0 || mu >= 1.0)
        return 0.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < llr.size(); ++k) {
        const double d = llr[k];
        if (w0[k] > 0.0)
            sum -= (1.0 - mu) * w0[k] * log_mix(mu, d);
        if (w1[k] > 0.0)
            sum -= mu * w1[k] * log_mix(1.0 - mu, -d);
    }
    return std::max(sum, 0.0);
}

struct BinomialPair {
    std::vector<double> w0, w1, llr;
};

BinomialPair binomial_pair(const BinaryDetectionProbs& probs, int trials) {
    BinomialPair bp;
    const auto lb0 = log_binomial_pmf_vector(trials, probs.p_off, probs.q_off);
    const auto lb1 = log_binomial_pmf_vector(trials, probs.p_on, probs.q_on);
    const double lp = log_ratio(probs.p_on, probs.p_off);
    const double lq = log_ratio(probs.q_on, probs.q_off);
    bp.w0.resize(trials + 1);
    bp.w1.resize(trials + 1);
    bp.llr.resize(trials + 1);
    for (int k = 0; k <= trials; ++k) {
        bp.w0[k] = std::exp(lb0[k]);
        bp.w1[k] = std::exp(lb1[k]);
        bp.llr[k] = xlog(k, lp) + xlog(trials - k, lq);
    }
    return bp;
}

}  // namespace

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("binary_entropy: argument must lie in [0,1]");
    if (x == 0.0 || x == 1.0)
        return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

double log_binomial_pmf(int trials, double p, int k) {
    if (trials < 0)
        throw DomainError("log_binomial_pmf: trials must be >= 0");
    if (k < 0 || k > trials)
        throw DomainError("log_binomial_pmf: k must lie in [0, trials]");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("log_binomial_pmf: p must lie in [0,1]");
    return log_choose(trials, k) + xlog(k, std::log(p)) + xlog(trials - k, std::log1p(-p));
}

std::vector<double> log_binomial_pmf_vector(int trials, double p, double q) {
    check_trials(trials);
    if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
        throw DomainError("log_binomial_pmf_vector: probabilities must lie in [0,1]");
    const double lp = std::log(p), lq = std::log(q);
    std::vector<double> out(trials + 1);
    for (int k = 0; k <= trials; ++k)
        out[k] = log_choose(trials, k) + xlog(k, lp) + xlog(trials - k, lq);
    return out;
}

double binomial_entropy(int trials, double p) {
    const auto lb = log_binomial_pmf_vector(trials, p, 1.0 - p);
    double h = 0.0;
    for (double l : lb)
        if (l > -kInf)
            h -= std::exp(l) * l;
    return h;
}

double binomial_entropy_gaussian_approx(int trials, double p) {
    if (trials < 1)
        throw DomainError("trials must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("binomial_entropy_gaussian_approx: p must lie in (0,1)");
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * trials * p * (1.0 - p));
}

std::vector<double> mixture_pmf(double mu, const BinaryDetectionProbs& probs, int trials) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
    probs.validate();
    const auto lb0 = log_binomial_pmf_vector(trials, probs.p_off, probs.q_off);
    const auto lb1 = log_binomial_pmf_vector(trials, probs.p_on, probs.q_on);
    std::vector<double> q(trials + 1);
    for (int k = 0; k <= trials; ++k)
        q[k] = (1.0 - mu) * std::exp(lb0[k]) + mu * std::exp(lb1[k]);
    return q;
}

double mi_binomial_mixture(double mu, const BinaryDetectionProbs& probs, int trials) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
    probs.validate();
    check_trials(trials);
    if (mu == 0.0 || mu == 1.0 || (probs.p_off == probs.p_on && probs.q_off == probs.q_on))
        return 0.0;
    const auto bp = binomial_pair(probs, trials);
    return mi_from_llr(mu, bp.w0, bp.w1, bp.llr);
}

MiMax mi_max_bruteforce(const BinaryDetectionProbs& probs, int trials, double tol) {
    probs.validate();
    check_trials(trials);
    if (!(tol > 0.0))
        throw DomainError("tol must be > 0");
    if (probs.p_off == probs.p_on && probs.q_off == probs.q_on)
        return {0.5, 0.0};
    const auto bp = binomial_pair(probs, trials);
    const auto best = maximize_scalar(
        [&](double mu) { return mi_from_llr(mu, bp.w0, bp.w1, bp.llr); }, 0.0, 1.0, tol);
    return {best.x, best.value};
}

double mi_discrete_poisson(double mu, double mean_off, double mean_on) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
    if (!(mean_off >= 0.0 && mean_on >= 0.0) || !std::isfinite(mean_off) ||
        !std::isfinite(mean_on))
        throw DomainError("Poisson means must be finite and >= 0");
    if (mu == 0.0 || mu == 1.0 || mean_off == mean_on)
        return 0.0;

    auto last_index = [](double m) -> int {
        if (m == 0.0)
            return 0;
        boost::math::poisson_distribution<> dist(m);
        return static_cast<int>(boost::math::quantile(boost::math::complement(dist, 1e-14))) + 1;
    };
    const int kmax = std::max(last_index(mean_off), last_index(mean_on));

    auto log_pmf = [](double m, int k) {
        if (m == 0.0)
            return k == 0 ? 0.0 : -kInf;
        return k * std::log(m) - m - std::lgamma(k + 1.0);
    };
    const double lr = log_ratio(mean_on, mean_off);
    std::vector<double> w0(kmax + 1), w1(kmax + 1), llr(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        w0[k] = std::exp(log_pmf(mean_off, k));
        w1[k] = std::exp(log_pmf(mean_on, k));
        llr[k] = xlog(k, lr) - (mean_on - mean_off);
    }
    return mi_from_llr(mu, w0, w1, llr);
}

}  // namespace pcc
