#include "pcc/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "pcc/approximation.hpp"
#include "pcc/asymptotics.hpp"
#include "pcc/capacity.hpp"
#include "pcc/channel_model.hpp"
#include "pcc/divergences.hpp"
#include "pcc/errors.hpp"
#include "pcc/experiments.hpp"
#include "pcc/monte_carlo.hpp"
#include "pcc/mutual_info.hpp"
#include "pcc/rate_bounds.hpp"

namespace pcc {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Probabilities from the products A*tau and Lambda0*tau.
BinaryDetectionProbs probs_xt(double at, double lt) {
    return {-std::expm1(-lt), -std::expm1(-(at + lt)), std::exp(-lt), std::exp(-(at + lt))};
}

bool rel_within(double measured, double expected, double tol) {
    return std::abs(measured / expected - 1.0) <= tol;
}

CriterionResult c1_sandwich() {
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 1.0;
    for (int i = 0; i < 1000; ++i) {
        const double lt = 0.1 * u01(rng);
        const double at = 5.0 * (1.0 - u01(rng));  // (0, 5]
        const int L = 1 + static_cast<int>(u01(rng) * 200.0);
        double mu = u01(rng);
        if (mu == 0.0)
            mu = 0.5;
        const auto pr = probs_xt(at, lt);
        const auto t = beta_triple(pr, L);
        const double exact = mi_binomial_mixture(mu, pr, L);
        worst = std::min({worst, exact - lower_envelope(mu, t), upper_envelope(mu, t) - exact});
    }
    return {1, "sandwich F_l <= I <= F_u on 1000 random tuples", worst >= -1e-9,
            fmt("min slack %.3e nats (need >= -1e-9)", worst)};
}

CriterionResult c2_chernoff_alpha() {
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double step = 1.0 / 998.0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = u01(rng), b = u01(rng);
        const int L = 1 + static_cast<int>(u01(rng) * 200.0);
        const BinaryDetectionProbs pr(std::min(a, b), std::max(a, b));
        const auto s = optimal_alpha_grid(pr, L, 999);
        worst = std::max(worst, std::abs(s.alpha - 0.5));
    }
    return {2, "min-Chernoff argmax over 999 alphas is 1/2", worst <= step + 1e-15,
            fmt("max |alpha - 0.5| = %.3e (grid step %.3e)", worst, step)};
}

CriterionResult c3_large_L() {
    bool pass = true;
    std::string m;
    for (double A : {5.0, 10.0}) {
        const double tau = 0.02, lam = 0.02;
        const auto pr = symbol_probs(ChannelParams::normalized(A, lam, tau, 50));
        std::vector<XY> pts;
        for (int L = 50; L <= 400; L += 10)
            pts.push_back({static_cast<double>(L), bound_gap(beta_triple(pr, L))});
        const double slope = estimate_exponential_rate(pts);
        const double pred = -exp_rate_large_L(pr.p_off, pr.p_on);
        pass = pass && rel_within(slope, pred, 0.02);
        m += fmt("%sA=%g slope %.6g vs %.6g (%.2f%%)", m.empty() ? "" : "; ", A, slope, pred,
                 100.0 * std::abs(slope / pred - 1.0));
    }
    return {3, "large-L gap decay rate within 2%", pass, m};
}

CriterionResult c4_zero_background() {
    const int L = 10;
    const double tau = 0.1;
    std::vector<XY> pts;
    double rmin = 1e300, rmax = 0.0;
    for (double at = 3.0; at <= 8.0 + 1e-9; at += 0.25) {
        const auto pr = probs_xt(at, 0.0);
        const double g = bound_gap(beta_triple(pr, L));
        pts.push_back({at / tau, g});
        const double r = g / std::pow(pr.q_on, L / 2.0);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    const double slope = estimate_exponential_rate(pts);
    const double pred = -exp_rate_zero_background(L, tau);
    const bool pass = rel_within(slope, pred, 0.02) && rmin >= 0.9 && rmax <= 2.1;
    return {4, "zero-background gap rate L*tau/2 and constants", pass,
            fmt("slope %.6g vs %.6g (%.2f%%); gap/(1-p1)^(L/2) in [%.4f, %.4f] (need [0.9, 2.1])",
                slope, pred, 100.0 * std::abs(slope / pred - 1.0), rmin, rmax)};
}

CriterionResult c5_low_A() {
    // Lambda0*tau = 0.02 with tau = 0.1.
    const double tau = 0.1, lam = 0.2, A = 1e-3;
    bool pass = true;
    std::string m;
    for (int L : {10, 20}) {
        const BinaryDetectionProbs pr(detection_prob(lam, tau), detection_prob(A + lam, tau),
                                      miss_prob(lam, tau), miss_prob(A + lam, tau));
        const double g = bound_gap(beta_triple(pr, L));
        const double coeff = gap_quadratic_coeff_low_A(pr.p_off, L, tau);
        const double ratio = g / (A * A) / coeff;
        pass = pass && std::abs(ratio - 1.0) <= 0.01;
        m += fmt("%sL=%d gap/A^2 %.6g vs %.6g (ratio %.5f)", m.empty() ? "" : "; ", L, g / (A * A),
                 coeff, ratio);
    }
    return {5, "low-A gap / A^2 coefficient within 1%", pass, m};
}

CriterionResult c6_offsets() {
    const int L = 10;
    const double tau = 0.1;
    bool pass = true;
    std::string m;
    // Large A: offset Delta - Delta_inf against A over A*tau in [15, 30].
    for (double lt : {0.1, 0.2}) {
        const BinaryDetectionProbs lim(-std::expm1(-lt), 1.0, std::exp(-lt), 0.0);
        const double dinf = bound_gap(beta_triple(lim, L));
        std::vector<XY> pts;
        for (double at = 15.0; at <= 30.0 + 1e-9; at += 1.0)
            pts.push_back({at / tau, std::abs(bound_gap(beta_triple(probs_xt(at, lt), L)) - dinf)});
        const double slope = estimate_exponential_rate(pts);
        const double pred = -std::min(0.5, lim.q_off * L) * tau;
        const bool ok = rel_within(slope, pred, 0.05);
        pass = pass && ok;
        m += fmt("%slarge-A Lambda0*tau=%g rate %.6g vs %.6g %s", m.empty() ? "" : "; ", lt, slope,
                 pred, ok ? "ok" : "off");
    }
    // Weak background: offset Delta(Lambda0) - Delta(0), linear in Lambda0, at A*tau = 1.
    {
        const double at = 1.0;
        const auto p0 = probs_xt(at, 0.0);
        const double d0 = bound_gap(beta_triple(p0, L));
        std::vector<XY> pts;
        for (double lt : {1e-6, 2e-6, 5e-6, 1e-5, 2e-5, 5e-5, 1e-4})
            pts.push_back({lt / tau, bound_gap(beta_triple(probs_xt(at, lt), L)) - d0});
        const double coeff = least_squares_slope(pts);
        const double pred = std::min(0.5, p0.p_on * L) * tau;
        const bool ok = rel_within(coeff, pred, 0.05);
        pass = pass && ok;
        m += fmt("; low-Lambda0 A*tau=1 linear coefficient %.6g vs %.6g %s", coeff, pred,
                 ok ? "ok" : "off");
    }
    return {6, "large-A / low-Lambda0 offset rates within 5%", pass, m};
}

CriterionResult c7_capacity_oracle() {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst_c = 0.0, worst_mu = 0.0;
    bool pass = true;
    for (int i = 0; i < 200; ++i) {
        const double tau = 0.01 + u01(rng);
        const double at = 1e-3 * std::pow(5e4, u01(rng));  // [1e-3, 50]
        const double lt = 2.0 * u01(rng);
        const auto c = capacity_tau(at / tau, lt / tau, tau);
        const auto b = capacity_bruteforce(at / tau, lt / tau, tau);
        const double dc = std::abs(c.capacity_nats_per_time - b.capacity_nats_per_time) /
                          (1.0 + b.capacity_nats_per_time);
        const double dmu = std::abs(c.duty_cycle - b.duty_cycle);
        worst_c = std::max(worst_c, dc);
        worst_mu = std::max(worst_mu, dmu);
        pass = pass && dc <= 1e-8 && dmu <= 1e-6;
    }
    return {7, "closed-form capacity vs brute force on 200 tuples", pass,
            fmt("max |dC|/(1+C) %.3e (<= 1e-8), max |dmu| %.3e (<= 1e-6)", worst_c, worst_mu)};
}

CriterionResult c8_duty_limits() {
    const double e = std::numbers::e;
    const double m1 = capacity_tau(1e-6, 0.0, 1.0).duty_cycle;
    const double m2 = capacity_tau(1e4, 0.0, 1.0).duty_cycle;
    const double m3 = capacity_tau(1e-6, 0.5, 1.0).duty_cycle;
    const double m4 = capacity_tau(1e4, 0.5, 1.0).duty_cycle;
    const double t4 = duty_cycle_limits(0.5, 1.0).high_A_with_background;
    const bool pass = std::abs(m1 - 1.0 / e) <= 1e-3 && std::abs(m2 - 0.5) <= 1e-3 &&
                      std::abs(m3 - 0.5) <= 1e-3 && std::abs(m4 - t4) <= 1e-3;
    return {8, "duty-cycle limits", pass,
            fmt("%.6f vs 1/e; %.6f vs 1/2; %.6f vs 1/2; %.6f vs %.6f (tol 1e-3)", m1, m2, m3, m4,
                t4)};
}

CriterionResult c9_capacity_limits() {
    const double a = capacity_tau(1e4, 0.0, 1.0).capacity_nats_per_time;
    const double b = capacity_tau(1e-6, 0.0, 1.0).capacity_nats_per_time / (1e-6 / std::numbers::e);
    const double c = capacity_tau(1e4, 0.5, 1.0).capacity_nats_per_time;
    const double cl = asymptotic_capacity_coeff_large_A(0.5, 1.0);
    const bool pass = std::abs(a - std::numbers::ln2) <= 1e-3 && std::abs(b - 1.0) <= 1e-3 &&
                      std::abs(c - cl) <= 1e-3;
    return {9, "capacity limits ln2/tau, A/e, c_Lambda0/tau", pass,
            fmt("C*tau %.8f vs ln2; C/(A/e) %.8f; C*tau %.8f vs c %.8f (tol 1e-3)", a, b, c, cl)};
}

CriterionResult c10_wyner_convergence() {
    const double w = wyner_poisson_capacity(1.0, 0.1).capacity;
    std::vector<double> rel;
    for (double tau : {1e-2, 1e-3, 1e-4})
        rel.push_back(std::abs(capacity_tau(1.0, 0.1, tau).capacity_nats_per_time - w) / w);
    const bool pass = rel[0] > rel[1] && rel[1] > rel[2] && rel[2] <= 0.01;
    return {10, "convergence to the continuous Poisson capacity", pass,
            fmt("relative error %.3e, %.3e, %.3e at tau 1e-2, 1e-3, 1e-4", rel[0], rel[1], rel[2])};
}

CriterionResult c11_quadratic() {
    const double r = wyner_poisson_capacity(1e-3, 1.0).capacity / 1e-6;
    bool pass = std::abs(r / 0.125 - 1.0) <= 0.01;
    std::string m = fmt("C_Poi/A^2 %.6f vs 0.125", r);
    for (double tau : {1.0, 0.1, 0.01}) {
        const auto d = quadratic_coeffs_low_A(1.0, tau);
        pass = pass && d.d_tau < d.d_poi;
        m += fmt("; tau=%g d_tau/d_Poi %.6f", tau, d.d_tau / d.d_poi);
    }
    const auto d = quadratic_coeffs_low_A(1.0, 1e-3);
    pass = pass && std::abs(d.d_tau / d.d_poi - 1.0) <= 1e-3;
    m += fmt("; tau=1e-3 ratio %.6f (need 1 +- 1e-3)", d.d_tau / d.d_poi);
    return {11, "low-A quadratic coefficients", pass, m};
}

CriterionResult c12_saturation_coeff() {
    const double c0 = asymptotic_capacity_coeff_large_A(0.0, 1.0);
    bool decreasing = true;
    double prev = c0;
    for (int k = 1; k <= 50; ++k) {
        const double c = asymptotic_capacity_coeff_large_A(0.1 * k, 1.0);
        decreasing = decreasing && c < prev;
        prev = c;
    }
    const double c20 = asymptotic_capacity_coeff_large_A(20.0, 1.0);
    const bool pass = c0 == std::numbers::ln2 && decreasing && c20 < 1e-2;
    return {12, "saturation coefficient c_Lambda0", pass,
            fmt("c_0 - ln2 = %.3g; decreasing on 0..5: %s; c(20) = %.3e", c0 - std::numbers::ln2,
                decreasing ? "yes" : "no", c20)};
}

CriterionResult c13_monotonicity() {
    std::string m;
    bool pass = true;
    // Capacity increasing in A.
    {
        bool ok = true;
        for (double lam : {0.0, 0.02, 1.0}) {
            double prev = 0.0;
            for (int k = 0; k < 100; ++k) {
                const double c =
                    capacity_tau(1e-3 * std::pow(3e4, k / 99.0), lam, 1.0).capacity_nats_per_time;
                ok = ok && c > prev;
                prev = c;
            }
        }
        pass = pass && ok;
        m += fmt("C increasing in A: %s", ok ? "yes" : "no");
    }
    // C/A decreasing for A*tau >= 10 at Lambda0*tau = 0.02.
    {
        bool ok = true;
        const double tau = 0.02, lam = 0.02 / tau;
        double prev = HUGE_VAL;
        for (int k = 0; k < 100; ++k) {
            const double A = 10.0 * std::pow(1e3, k / 99.0) / tau;
            const double r = capacity_tau(A, lam, tau).capacity_nats_per_time / A;
            ok = ok && r < prev;
            prev = r;
        }
        pass = pass && ok;
        m += fmt("; C/A decreasing: %s", ok ? "yes" : "no");
    }
    // C_{T_s,tau} increasing in tau on [ln2/Lambda0, T_s].
    {
        const double lam = 1.0, ts = 1.0, t0 = std::numbers::ln2 / lam, A = 10.0 / t0;
        int violations = 0;
        double prev = 0.0, first = 0.0, last = 0.0;
        for (int k = 0; k < 50; ++k) {
            const double tau = t0 + (ts - t0) * k / 49.0;
            const double c = capacity_sampled(A, lam, tau, ts).capacity_nats_per_time;
            if (k == 0)
                first = c;
            else if (c <= prev)
                ++violations;
            prev = last = c;
        }
        pass = pass && violations == 0;
        m += fmt("; C_{T_s,tau} increasing in tau: %d/49 steps decrease (C %.4g -> %.4g)",
                 violations, first, last);
    }
    // C_{tau,tau} decreasing in tau for Lambda0 = 0, A*tau >= 10.
    {
        bool ok = true;
        const double A = 100.0;
        double prev = HUGE_VAL;
        for (int k = 0; k < 50; ++k) {
            const double tau = 0.1 * std::pow(100.0, k / 49.0);
            const double c = capacity_tau(A, 0.0, tau).capacity_nats_per_time;
            ok = ok && c < prev;
            prev = c;
        }
        pass = pass && ok;
        m += fmt("; C_{tau,tau} decreasing in tau: %s", ok ? "yes" : "no");
    }
    return {13, "capacity monotonicity suite", pass, m};
}

CriterionResult c14_monte_carlo() {
    ExperimentConfig cfg;
    cfg.peak_rate = 10.0;
    cfg.background = 0.02;
    cfg.dead_time = 0.02;
    cfg.samples = 30;
    cfg.symbols = 1000000;
    cfg.seed = 20140101;
    cfg.bootstrap = 200;
    const Table t1 = run_simulate(cfg);
    const Table t2 = run_simulate(cfg);
    std::ostringstream s1, s2;
    write_csv(s1, t1);
    write_csv(s2, t2);
    const auto& last = t1.rows.back();
    // columns: z_p0 = 7, z_p1 = 8, z_mi = 9
    const bool identical = s1.str() == s2.str();
    const bool pass = std::abs(last[7]) < 3.0 && std::abs(last[8]) < 3.0 &&
                      std::abs(last[9]) < 3.0 && identical;
    return {14, "Monte Carlo check at 1e6 symbols", pass,
            fmt("z(p0) %.3f, z(p1) %.3f, z(MI) %.3f (plug-in %.6f, exact %.6f, bootstrap se %.2e); "
                "rerun byte-identical: %s",
                last[7], last[8], last[9], last[5], last[6], last[10], identical ? "yes" : "no")};
}

CriterionResult c15_approximation() {
    const int L = 30;
    int good = 0, total = 0;
    for (int ai = 1; ai <= 10; ++ai) {
        const double A = 2.0 * ai;
        const auto pr = symbol_probs(ChannelParams::normalized(A, 0.02, 0.02, L));
        const auto t = beta_triple(pr, L);
        for (int mi = 0; mi < 5; ++mi) {
            const double mu = 0.3 + 0.1 * mi;
            const double e = mi_binomial_mixture(mu, pr, L);
            const double ap = mi_approx_low_background(mu, pr, L);
            const double lo = lower_envelope(mu, t), up = upper_envelope(mu, t);
            good += std::abs(ap - e) < std::min(std::abs(lo - e), std::abs(up - e));
            ++total;
        }
    }
    return {15, "approximation beats both bounds on >= 90% of the grid", good >= 0.9 * total,
            fmt("%d/%d points (need %d)", good, total, static_cast<int>(std::ceil(0.9 * total)))};
}

}  // namespace

CriterionResult run_criterion(int id) {
    using Fn = CriterionResult (*)();
    static const Fn table[kCriterionCount] = {
        c1_sandwich,     c2_chernoff_alpha, c3_large_L,         c4_zero_background,
        c5_low_A,        c6_offsets,        c7_capacity_oracle, c8_duty_limits,
        c9_capacity_limits, c10_wyner_convergence, c11_quadratic, c12_saturation_coeff,
        c13_monotonicity, c14_monte_carlo,  c15_approximation};
    if (id < 1 || id > kCriterionCount)
        throw DomainError("criterion id must be in 1..15");
    const auto start = Clock::now();
    CriterionResult r = table[id - 1]();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    // Runtime budgets stated with the criteria.
    const double budget = id == 1 ? 10.0 : id == 7 ? 5.0 : id == 14 ? 30.0 : 0.0;
    if (budget > 0.0) {
        r.measured += fmt("; runtime %.2f s (budget %g s)", r.seconds, budget);
        r.pass = r.pass && r.seconds < budget;
    }
    return r;
}

std::vector<CriterionResult> run_all_criteria(
    const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id));
        if (on_result)
            on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    return fmt("%s [%2d] %s: ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str()) + r.measured +
           fmt(" (%.2f s)", r.seconds);
}

}  // namespace pcc
