#include "pcc/capacity.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/log1p.hpp>

#include "pcc/divergences.hpp"
#include "pcc/errors.hpp"
#include "pcc/optimize.hpp"

namespace pcc {
namespace {

// Detection probability carried with its complement and log-complement.
struct Prob {
    double p;
    double q;
    double x;  // rate * tau, so ln q = -x
};

Prob make_prob(double x) { return {-std::expm1(-x), std::exp(-x), x}; }

// h_b(p) using ln(1-p) = -x exactly.
double entropy(const Prob& pr) {
    if (pr.p == 0.0 || pr.q == 0.0)
        return 0.0;
    return -pr.p * std::log(pr.p) + pr.q * pr.x;
}

double bernoulli_kl(double pa, double qa, double pb, double qb) {
    return kl_binomial(pa, qa, pb, qb, 1);
}

struct Channel {
    Prob off, on;
    double delta;  // p1 - p0
};

Channel make_channel(double A, double lambda0, double tau) {
    if (!(A >= 0.0) || !std::isfinite(A))
        throw DomainError("peak rate must be finite and >= 0");
    if (!(lambda0 >= 0.0) || !std::isfinite(lambda0))
        throw DomainError("background rate must be finite and >= 0");
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw DomainError("dead time must be finite and > 0");
    Channel c{make_prob(lambda0 * tau), make_prob((A + lambda0) * tau), 0.0};
    c.delta = c.off.q * -std::expm1(-A * tau);
    return c;
}

double objective(const Channel& c, double mu) {
    if (mu <= 0.0 || mu >= 1.0)
        return 0.0;
    const double ph = (1.0 - mu) * c.off.p + mu * c.on.p;
    const double qh = (1.0 - mu) * c.off.q + mu * c.on.q;
    return (1.0 - mu) * bernoulli_kl(c.off.p, c.off.q, ph, qh) +
           mu * bernoulli_kl(c.on.p, c.on.q, ph, qh);
}

// (h_b(p1) - h_b(p0)) / (p1 - p0).
double entropy_slope(const Channel& c) {
    if (c.off.p == 0.0)
        return entropy(c.on) / c.on.p;
    if (c.delta < 0.25 * std::min(c.off.p, c.off.q)) {
        // h_b(p1) - h_b(p0) = h_b'(p0) delta - KL(p1 || p0)
        const double kl = bernoulli_kl(c.on.p, c.on.q, c.off.p, c.off.q);
        return std::log(c.off.q) - std::log(c.off.p) - kl / c.delta;
    }
    return (entropy(c.on) - entropy(c.off)) / c.delta;
}

DutyCycle duty_cycle_of(const Channel& c) {
    const double slope = entropy_slope(c);
    DutyCycle d;
    d.coeff_a = std::exp(-slope);
    const double logistic = 1.0 / (1.0 + std::exp(slope));  // a / (1 + a)
    d.mu_star = (logistic - c.off.p) / c.delta;
    return d;
}

}  // namespace

double duty_cycle_objective(double mu, double A, double lambda0, double tau) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
    return objective(make_channel(A, lambda0, tau), mu);
}

DutyCycle optimal_duty_cycle(double A, double lambda0, double tau) {
    const auto c = make_channel(A, lambda0, tau);
    if (!(A > 0.0) || c.delta == 0.0)
        throw DomainError("optimal_duty_cycle requires A > 0");
    return duty_cycle_of(c);
}

CapacityResult capacity_tau(double A, double lambda0, double tau) {
    const auto c = make_channel(A, lambda0, tau);
    CapacityResult r;
    if (A == 0.0 || c.delta == 0.0) {
        r.duty_cycle = 0.5;
        r.mix_prob = c.off.p;
        return r;
    }
    const auto d = duty_cycle_of(c);
    r.duty_cycle = d.mu_star;
    r.coeff_a = d.coeff_a;
    r.mix_prob = (1.0 - d.mu_star) * c.off.p + d.mu_star * c.on.p;
    r.capacity_nats_per_time = objective(c, d.mu_star) / tau;
    return r;
}

CapacityResult capacity_sampled(double A, double lambda0, double tau, double sampling_interval) {
    if (!(sampling_interval >= tau))
        throw DomainError("sampling_interval must be >= dead time");
    auto r = capacity_tau(A, lambda0, tau);
    r.capacity_nats_per_time *= tau / sampling_interval;
    return r;
}

CapacityResult capacity_bruteforce(double A, double lambda0, double tau, double tol) {
    const auto c = make_channel(A, lambda0, tau);
    CapacityResult r;
    if (A == 0.0 || c.delta == 0.0) {
        r.mix_prob = c.off.p;
        return r;
    }
    const auto best = maximize_scalar([&](double mu) { return objective(c, mu); }, 0.0, 1.0, tol);
    r.duty_cycle = best.x;
    r.coeff_a = std::exp(-entropy_slope(c));
    r.mix_prob = (1.0 - best.x) * c.off.p + best.x * c.on.p;
    r.capacity_nats_per_time = best.value / tau;
    return r;
}

WynerCapacity wyner_poisson_capacity(double A, double lambda0) {
    if (!(A > 0.0) || !std::isfinite(A))
        throw DomainError("wyner_poisson_capacity requires finite A > 0");
    if (!(lambda0 >= 0.0) || !std::isfinite(lambda0))
        throw DomainError("background rate must be finite and >= 0");
    if (lambda0 == 0.0)
        return {1.0 / std::numbers::e, A / std::numbers::e};

    const double s = lambda0 / A;
    // q* = (1+s)^(1+s) / (s^s e) - s = 1 + (1+s) expm1(s log1pmx(1/s))
    const double q = 1.0 + (1.0 + s) * std::expm1(s * boost::math::log1pmx(1.0 / s));

    // C/A = sum_i w_i x_i ln(x_i / xbar) over x1 = 1+s (weight q), x0 = s (weight 1-q),
    // written as xbar * sum_i w_i [(1+r_i) ln(1+r_i) - r_i] with 1 + r_i = x_i / xbar.
    auto g = [](double ratio, double r) {
        if (std::abs(r) < 0.5)
            return r * std::log1p(r) + boost::math::log1pmx(r);
        return ratio * std::log(ratio) - r;
    };
    const double xbar = q + s;
    const double r1 = (1.0 - q) / xbar;
    const double r0 = -q / xbar;
    const double per_A = xbar * (q * g((1.0 + s) / xbar, r1) + (1.0 - q) * g(s / xbar, r0));
    return {q, A * per_A};
}

double asymptotic_capacity_coeff_large_A(double lambda0, double tau) {
    if (!(lambda0 >= 0.0) || !std::isfinite(lambda0))
        throw DomainError("background rate must be finite and >= 0");
    if (!(tau > 0.0))
        throw DomainError("dead time must be > 0");
    // With v = e^(Lambda0 tau) h_b(p(Lambda0)) and u = e^v the displayed
    // h_b(u/(1+u)) - v/(1+u) reduces to ln(1+u) - v = log1p(e^-v).
    const auto p0 = make_prob(lambda0 * tau);
    const double v = entropy(p0) / p0.q;
    return std::log1p(std::exp(-v));
}

QuadraticCoeffs quadratic_coeffs_low_A(double lambda0, double tau) {
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0))
        throw DomainError("quadratic_coeffs_low_A requires Lambda0 > 0");
    if (!(tau > 0.0))
        throw DomainError("dead time must be > 0");
    const auto p0 = make_prob(lambda0 * tau);
    return {1.0 / (8.0 * lambda0), tau * p0.q / (8.0 * p0.p)};
}

DutyCycleLimits duty_cycle_limits(double lambda0, double tau) {
    if (!(lambda0 >= 0.0) || !std::isfinite(lambda0))
        throw DomainError("background rate must be finite and >= 0");
    if (!(tau > 0.0))
        throw DomainError("dead time must be > 0");
    DutyCycleLimits lim;
    lim.low_A_zero_background = 1.0 / std::numbers::e;
    lim.high_A_zero_background = 0.5;
    lim.low_A_with_background = 0.5;
    const auto p0 = make_prob(lambda0 * tau);
    const double v = entropy(p0) / p0.q;
    // 1 - 1/((1+u)(1-p0)) with u = e^v
    lim.high_A_with_background = 1.0 - 1.0 / ((1.0 + std::exp(v)) * p0.q);
    return lim;
}

double duty_cycle_unit_schedule_limit() {
    const auto p1 = make_prob(1.0);
    const double e = std::exp(-entropy(p1) / p1.p);
    return e / (p1.p * (1.0 + e));
}

}  // namespace pcc
