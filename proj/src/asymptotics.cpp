#include "pcc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_trials(int trials) {
    if (trials < 1)
        throw DomainError("trials must be >= 1");
}

void check_open_prob(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError(std::string(what) + " must lie in (0,1)");
}

// Shared evaluator for the offset branches; x0 plays the role of p0 (with
// complement x0c) and y the role of 1 - p1. The low-background version swaps
// in 1 - p1 and p0.
GapOffsets offsets(double x0, double x0c, double y, int trials) {
    const double L = trials;
    const double key = x0c * L;
    const double half = std::pow(x0, (L - 1.0) / 2.0) * std::sqrt(x0c);
    const double scale = 1.0 / (1.0 + std::pow(x0, L / 2.0));
    GapOffsets g;
    if (key > 0.5) {
        g.epsilon_u = 2.0 * half * std::sqrt(y);
        g.epsilon_l = scale * half * std::sqrt(y);
    } else if (key == 0.5) {
        const double extra = std::pow(x0, -L + 0.5) / std::sqrt(x0c);
        g.epsilon_u = (2.0 * half - extra) * std::sqrt(y);
        g.epsilon_l = (scale * half - 0.5 * extra) * std::sqrt(y);
    } else {
        const double log_term = -L * x0 * std::log(x0) - key * std::log(x0c) + key * std::log(y);
        g.epsilon_u = -std::exp(log_term);
        g.epsilon_l = -0.5 * std::exp(log_term);
    }
    return g;
}

Interval gap_limits(double x, int trials) {
    const double xh = std::pow(x, trials / 2.0);
    const double xl = std::pow(x, static_cast<double>(trials));
    return {std::log1p(xh) - 0.5 * std::log1p(xl), 2.0 * xh - xl};
}

}  // namespace

Interval imax_asymptote_large_L(const BetaTriple& t) {
    const double ln2 = std::numbers::ln2;
    Interval r;
    r.lower = ln2 - t.beta;
    r.upper = (t.beta1 == t.beta2) ? ln2 - t.beta1 : ln2 + std::max(t.beta1, t.beta2) / 2.0;
    return r;
}

BetaExpansion expansions_large_A(const BinaryDetectionProbs& probs, int trials) {
    check_trials(trials);
    probs.validate();
    const double p0 = probs.p_off, q0 = probs.q_off;
    check_open_prob(p0, "p0");
    if (!(probs.p_on > p0))
        throw DomainError("expansions_large_A requires p0 < p1 <= 1");
    const double L = trials;
    const double y = probs.q_on;
    BetaExpansion e;
    // The first-order term of the Chernoff expansion carries a factor L: the
    // L-th power of sqrt(p0) + sqrt((1-p0) y) - (sqrt(p0)/2) y + O(y^(3/2)).
    e.beta = std::pow(p0, L / 2.0) -
             L * std::pow(p0, (L - 1.0) / 2.0) * (std::sqrt(p0) / 2.0 * y - std::sqrt(q0 * y));
    const double y_log = y > 0.0 ? y * L * (std::log(y) - std::log(q0)) : 0.0;
    e.beta1 = std::pow(p0, L) - std::pow(p0, L) * (-L * y + y_log);
    if (y > 0.0) {
        e.beta2 = std::exp(-L * p0 * std::log(p0) - q0 * L * std::log(q0) + q0 * L * std::log(y));
    }
    return e;
}

BetaExpansion expansions_large_A(double p0, double p1, int trials) {
    return expansions_large_A(BinaryDetectionProbs(p0, p1), trials);
}

Interval imax_bounds_large_A(const BinaryDetectionProbs& probs, int trials) {
    check_trials(trials);
    probs.validate();
    const double p0 = probs.p_off;
    check_open_prob(p0, "p0");
    if (!(probs.p_on > 0.0))
        throw DomainError("imax_bounds_large_A requires 0 < p1 <= 1");
    const double L = trials;
    const double y = probs.q_on;
    const double ph = std::pow(p0, L / 2.0);
    Interval r;
    r.lower = std::numbers::ln2 - std::log1p(ph) +
              L * std::pow(p0, (L - 1.0) / 2.0) / (1.0 + ph) *
                  (std::sqrt(p0) / 2.0 * y - std::sqrt(probs.q_off * y));
    const double pl = std::pow(p0, L);
    r.upper = pl + std::log(2.0 - pl);
    return r;
}

Interval imax_bounds_large_A(double p0, double p1, int trials) {
    return imax_bounds_large_A(BinaryDetectionProbs(p0, p1), trials);
}

double exp_rate_large_L(double p0, double p1) {
    if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0))
        throw DomainError("probabilities must lie in [0,1]");
    if (p0 == p1)
        return 0.0;
    const double d = std::sqrt(p0) - std::sqrt(p1);
    const double e = std::sqrt(1.0 - p0) - std::sqrt(1.0 - p1);
    const double gap = 0.5 * (d * d + e * e);
    if (gap < 0.5)
        return -std::log1p(-gap);
    const double s = std::sqrt(p0 * p1) + std::sqrt((1.0 - p0) * (1.0 - p1));
    return s > 0.0 ? -std::log(s) : kInf;
}

GapOffsets gap_offsets_large_A(const BinaryDetectionProbs& probs, int trials) {
    check_trials(trials);
    probs.validate();
    check_open_prob(probs.p_off, "p0");
    return offsets(probs.p_off, probs.q_off, probs.q_on, trials);
}

GapOffsets gap_offsets_large_A(double p0, double p1, int trials) {
    if (!(p1 >= 0.0 && p1 <= 1.0))
        throw DomainError("p1 must lie in [0,1]");
    return gap_offsets_large_A(BinaryDetectionProbs(p0, p1), trials);
}

GapOffsets gap_offsets_low_background(const BinaryDetectionProbs& probs, int trials) {
    check_trials(trials);
    probs.validate();
    check_open_prob(probs.p_on, "p1");
    return offsets(probs.q_on, probs.p_on, probs.p_off, trials);
}

GapOffsets gap_offsets_low_background(double p0, double p1, int trials) {
    if (!(p0 >= 0.0 && p0 <= 1.0))
        throw DomainError("p0 must lie in [0,1]");
    return gap_offsets_low_background(BinaryDetectionProbs(p0, p1), trials);
}

Interval gap_limits_large_A(double p0, int trials) {
    check_trials(trials);
    return gap_limits(p0, trials);
}

Interval gap_limits_low_background(double p1, int trials) {
    check_trials(trials);
    return gap_limits(1.0 - p1, trials);
}

double exp_rate_zero_background(int trials, double dead_time) {
    check_trials(trials);
    if (!(dead_time > 0.0))
        throw DomainError("dead_time must be > 0");
    return trials * dead_time / 2.0;
}

double gap_quadratic_coeff_low_A(double p0, int trials, double dead_time) {
    check_trials(trials);
    if (!(dead_time > 0.0))
        throw DomainError("dead_time must be > 0");
    if (!(p0 >= 0.0 && p0 < 1.0))
        throw DomainError("p0 must lie in [0,1)");
    if (p0 == 0.0)
        return kInf;
    return 3.0 * trials * (1.0 - p0) * dead_time * dead_time / (16.0 * p0);
}

double estimate_exponential_rate(std::span<const XY> points) {
    if (points.size() < 3)
        throw DomainError("estimate_exponential_rate: need at least three points");
    std::vector<XY> logged;
    logged.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.y > 0.0))
            throw DomainError("estimate_exponential_rate: values must be > 0");
        logged.push_back({p.x, std::log(p.y)});
    }
    return least_squares_slope(logged);
}

}  // namespace pcc
