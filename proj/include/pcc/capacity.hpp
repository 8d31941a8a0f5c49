#pragma once

#include <numbers>

namespace pcc {

// Optimal on-off keying operating point of the dead-time receiver sampled
// once per dead time (T_s = tau). Information in nats.
struct CapacityResult {
    double duty_cycle = 0.5;               // mu*
    double coeff_a = 0.0;                  // a
    double mix_prob = 0.0;                 // p-hat at mu*
    double capacity_nats_per_time = 0.0;   // C

    double capacity_bits_per_time() const { return capacity_nats_per_time / std::numbers::ln2; }
};

struct DutyCycle {
    double mu_star = 0.5;
    double coeff_a = 0.0;
};

// F(mu) = h_b(p-hat) - (1-mu) h_b(p(Lambda0)) - mu h_b(p(A+Lambda0)), nats per sample.
double duty_cycle_objective(double mu, double A, double lambda0, double tau);

DutyCycle optimal_duty_cycle(double A, double lambda0, double tau);

CapacityResult capacity_tau(double A, double lambda0, double tau);

// Receiver sampled every T_s >= tau: capacity scaled by tau / T_s.
CapacityResult capacity_sampled(double A, double lambda0, double tau, double sampling_interval);

// Direct numerical maximization of F(mu); used as an oracle for capacity_tau.
CapacityResult capacity_bruteforce(double A, double lambda0, double tau, double tol = 1e-10);

struct WynerCapacity {
    double q_star = 0.0;
    double capacity = 0.0;  // nats per unit time
};

// Peak-limited capacity of the ideal continuous-time Poisson channel.
WynerCapacity wyner_poisson_capacity(double A, double lambda0);

// c such that C_{tau,tau} -> c / tau as A -> infinity.
double asymptotic_capacity_coeff_large_A(double lambda0, double tau);

struct QuadraticCoeffs {
    double d_poi = 0.0;  // continuous Poisson: C ~ d_poi A^2
    double d_tau = 0.0;  // dead-time receiver: C ~ d_tau A^2
};

QuadraticCoeffs quadratic_coeffs_low_A(double lambda0, double tau);

struct DutyCycleLimits {
    double low_A_zero_background = 0.0;
    double high_A_zero_background = 0.0;
    double low_A_with_background = 0.0;
    double high_A_with_background = 0.0;
};

DutyCycleLimits duty_cycle_limits(double lambda0, double tau);

// Limit of mu* along the schedule A = 1/tau, tau -> 0, Lambda0 = 0.
double duty_cycle_unit_schedule_limit();

}  // namespace pcc
