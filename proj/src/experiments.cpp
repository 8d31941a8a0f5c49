#include "pcc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "pcc/approximation.hpp"
#include "pcc/asymptotics.hpp"
#include "pcc/capacity.hpp"
#include "pcc/channel_model.hpp"
#include "pcc/divergences.hpp"
#include "pcc/errors.hpp"
#include "pcc/monte_carlo.hpp"
#include "pcc/mutual_info.hpp"
#include "pcc/optimize.hpp"
#include "pcc/rate_bounds.hpp"

namespace pcc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text, const std::string& what) {
    const std::string s = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError(what + ": not a finite number: '" + s + "'");
    return v;
}

template <class Int>
Int parse_int(std::string_view text, const std::string& what) {
    const std::string s = trim(text);
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError(what + ": not an integer: '" + s + "'");
    return v;
}

// Evaluates row(i) for i in [0, n) on up to `threads` workers; rows stay in index order.
std::vector<std::vector<double>> parallel_rows(std::size_t n, unsigned threads,
                                               const std::function<std::vector<double>(std::size_t)>& row) {
    std::vector<std::vector<double>> out(n);
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = row(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            (void)w;
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    out[i] = row(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

void check_finite(const Table& table) {
    for (const auto& r : table.rows)
        for (double v : r)
            if (std::isinf(v))
                throw NumericalError("non-finite value in output");
}

BinaryDetectionProbs probs_for(double A, double lambda0, double tau) {
    return {detection_prob(lambda0, tau), detection_prob(A + lambda0, tau), miss_prob(lambda0, tau),
            miss_prob(A + lambda0, tau)};
}

double fit_rate(const std::vector<XY>& pts, bool log_y) {
    std::vector<XY> usable;
    for (const auto& p : pts)
        if (!log_y || p.y > 1e-13)
            usable.push_back(p);
    if (usable.size() < 3)
        return kNaN;
    return log_y ? estimate_exponential_rate(usable) : least_squares_slope(usable);
}

SimPath parse_path(const std::string& s) {
    if (s == "bernoulli")
        return SimPath::Bernoulli;
    if (s == "arrivals")
        return SimPath::Arrivals;
    throw UsageError("path must be 'bernoulli' or 'arrivals'");
}

}  // namespace

double ExperimentConfig::effective_sampling_interval() const {
    return sampling_interval ? *sampling_interval : 1.0 / samples;
}

std::vector<double> parse_grid(std::string_view spec_in) {
    const std::string spec = trim(spec_in);
    if (spec.empty())
        throw UsageError("empty grid specification");
    std::vector<std::string> parts;
    const bool ranged = spec.rfind("lin:", 0) == 0 || spec.rfind("log:", 0) == 0;
    const char sep = ranged ? ':' : ',';
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, sep);)
        parts.push_back(item);
    if (!ranged) {
        std::vector<double> out;
        for (const auto& p : parts)
            out.push_back(parse_double(p, "grid value"));
        return out;
    }
    if (parts.size() != 4)
        throw UsageError("grid must be lin:a:b:n, log:a:b:n or a comma list: '" + spec + "'");
    const double a = parse_double(parts[1], "grid start");
    const double b = parse_double(parts[2], "grid end");
    const int n = parse_int<int>(parts[3], "grid count");
    if (n < 1)
        throw UsageError("grid count must be >= 1");
    const bool log_scale = parts[0] == "log";
    if (log_scale && !(a > 0.0 && b > 0.0))
        throw UsageError("log grid endpoints must be > 0");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        out[i] = log_scale ? std::exp(std::log(a) + f * (std::log(b) - std::log(a)))
                           : a + f * (b - a);
    }
    if (n > 1) {
        out.front() = a;
        out.back() = b;
    }
    return out;
}

bool is_setting_key(const std::string& key) {
    static const std::vector<std::string> keys{
        "peak-rate",   "background", "dead-time", "sampling-interval", "samples", "mu-grid",
        "a-grid",      "l-grid",     "lambda-grid", "tau-grid",        "scenario", "seed",
        "symbols",     "path",       "bootstrap", "threads",           "out"};
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    if (key == "peak-rate") {
        cfg.peak_rate = parse_double(value, key);
    } else if (key == "background") {
        cfg.background = parse_double(value, key);
    } else if (key == "dead-time") {
        cfg.dead_time = parse_double(value, key);
    } else if (key == "sampling-interval") {
        cfg.sampling_interval = parse_double(value, key);
    } else if (key == "samples") {
        cfg.samples = parse_int<int>(value, key);
        if (cfg.samples < 1)
            throw UsageError("samples must be >= 1");
    } else if (key == "mu-grid") {
        parse_grid(value);
        cfg.mu_grid = value;
    } else if (key == "a-grid") {
        parse_grid(value);
        cfg.a_grid = value;
    } else if (key == "l-grid") {
        parse_grid(value);
        cfg.l_grid = value;
    } else if (key == "lambda-grid") {
        parse_grid(value);
        cfg.lambda_grid = value;
    } else if (key == "tau-grid") {
        if (!value.empty())
            parse_grid(value);
        cfg.tau_grid = value;
    } else if (key == "scenario") {
        const auto& names = gap_scenarios();
        if (std::find(names.begin(), names.end(), value) == names.end())
            throw UsageError("unknown scenario '" + value +
                             "' (large-L, large-A, low-lambda, zero-lambda, low-A)");
        cfg.scenario = value;
    } else if (key == "seed") {
        cfg.seed = parse_int<std::uint64_t>(value, key);
    } else if (key == "symbols") {
        cfg.symbols = parse_int<std::int64_t>(value, key);
        if (cfg.symbols < 1)
            throw UsageError("symbols must be >= 1");
    } else if (key == "path") {
        parse_path(value);
        cfg.path = value;
    } else if (key == "bootstrap") {
        cfg.bootstrap = parse_int<int>(value, key);
        if (cfg.bootstrap < 0)
            throw UsageError("bootstrap must be >= 0");
    } else if (key == "threads") {
        cfg.threads = parse_int<unsigned>(value, key);
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw UsageError("unknown setting '" + key + "'");
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const std::string t = trim(line);
        if (t.empty())
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        if (!is_setting_key(key))
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
        out.emplace_back(std::move(key), trim(t.substr(eq + 1)));
    }
    return out;
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open config file '" + path + "'");
    for (const auto& [k, v] : parse_config_text(in))
        apply_setting(cfg, k, v);
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list{
        {"duty-L20", "duty-imax", "optimal and bound-derived duty cycles vs A, L = 20",
         {{"samples", "20"}, {"dead-time", "0.02"}, {"background", "0.02"},
          {"a-grid", "log:0.1:1000:41"}}},
        {"duty-L30", "duty-imax", "optimal and bound-derived duty cycles vs A, L = 30",
         {{"samples", "30"}, {"dead-time", "0.02"}, {"background", "0.02"},
          {"a-grid", "log:0.1:1000:41"}}},
        {"mi-vs-mu", "mi-sweep", "MI, bounds, approximation and discrete Poisson vs duty cycle",
         {{"samples", "30"}, {"dead-time", "0.02"}, {"background", "0.02"}, {"peak-rate", "10"},
          {"mu-grid", "lin:0:1:101"}}},
        {"imax-L30", "duty-imax", "maximal MI, its bounds and the approximation vs A, L = 30",
         {{"samples", "30"}, {"dead-time", "0.02"}, {"background", "0.02"},
          {"a-grid", "log:0.1:1000:41"}}},
        {"gap-large-L", "gap", "bound gap vs L (exponential decay)",
         {{"scenario", "large-L"}, {"dead-time", "0.02"}, {"background", "0.02"},
          {"peak-rate", "5"}, {"l-grid", "lin:50:400:36"}}},
        {"gap-large-A", "gap", "bound gap offset vs A with background",
         {{"scenario", "large-A"}, {"samples", "10"}, {"dead-time", "0.1"}, {"background", "1"},
          {"a-grid", "lin:150:300:16"}}},
        {"gap-low-lambda", "gap", "bound gap offset vs background rate",
         {{"scenario", "low-lambda"}, {"samples", "10"}, {"dead-time", "0.1"},
          {"peak-rate", "10"}, {"lambda-grid", "log:1e-5:1e-3:9"}}},
        {"gap-zero-lambda", "gap", "bound gap vs A without background",
         {{"scenario", "zero-lambda"}, {"samples", "10"}, {"dead-time", "0.1"},
          {"background", "0"}, {"a-grid", "lin:30:80:21"}}},
        {"gap-low-A", "gap", "bound gap / A^2 at small A",
         {{"scenario", "low-A"}, {"samples", "10"}, {"dead-time", "0.1"}, {"background", "0.2"},
          {"a-grid", "log:1e-4:1e-2:9"}}},
        {"cap-duty-bg", "capacity", "optimal duty cycle vs A, Lambda0 = 0.001",
         {{"dead-time", "0.02"}, {"background", "0.001"}, {"a-grid", "log:0.01:10000:61"}}},
        {"cap-duty-nobg", "capacity", "optimal duty cycle vs A, Lambda0 = 0",
         {{"dead-time", "0.02"}, {"background", "0"}, {"a-grid", "log:0.01:10000:61"}}},
        {"cap-vs-A-bg", "capacity", "capacity vs A with Wyner reference, Lambda0 = 0.001",
         {{"dead-time", "0.02"}, {"background", "0.001"}, {"a-grid", "log:0.01:100000:71"}}},
        {"cap-vs-A-nobg", "capacity", "capacity vs A with Wyner reference, Lambda0 = 0",
         {{"dead-time", "0.02"}, {"background", "0"}, {"a-grid", "log:0.01:100000:71"}}},
        {"cap-low-A-bg", "capacity", "low-A capacity and its quadratic law, Lambda0 = 1",
         {{"dead-time", "0.02"}, {"background", "1"}, {"a-grid", "log:0.0001:0.1:31"}}},
        {"cap-low-A-nobg", "capacity", "low-A capacity and the A/e law, Lambda0 = 0",
         {{"dead-time", "0.02"}, {"background", "0"}, {"a-grid", "log:0.0001:0.1:31"}}},
        {"cap-vs-tau", "capacity", "capacity vs dead time at A = 1, Lambda0 = 0.1",
         {{"peak-rate", "1"}, {"background", "0.1"}, {"tau-grid", "log:0.0001:1:41"}}},
    };
    return list;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

std::string format_number(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

Table run_mi_sweep(const ExperimentConfig& cfg) {
    const int L = cfg.samples;
    const double ts = cfg.effective_sampling_interval();
    ChannelParams params{cfg.peak_rate, cfg.background, cfg.dead_time, ts, L};
    const auto probs = symbol_probs(params);
    const auto t = beta_triple(probs, L);
    const bool approx_ok = approximation_valid(probs, L);
    const double upper_sub = upper_bound_max(t);
    const double mean_off = cfg.background * L * ts;
    const double mean_on = (cfg.peak_rate + cfg.background) * L * ts;
    const auto mus = parse_grid(cfg.mu_grid);
    for (double mu : mus)
        if (!(mu >= 0.0 && mu <= 1.0))
            throw UsageError("mu grid values must lie in [0,1]");

    Table table;
    table.header = {"mu",    "exact_mi",  "lower", "lower_sub",
                    "upper", "upper_sub", "approx", "poisson_benchmark"};
    table.rows = parallel_rows(mus.size(), cfg.threads, [&](std::size_t i) {
        const double mu = mus[i];
        return std::vector<double>{mu,
                                   mi_binomial_mixture(mu, probs, L),
                                   lower_envelope_best_alpha(mu, probs, L),
                                   lower_envelope(mu, t),
                                   upper_envelope(mu, t),
                                   upper_sub,
                                   approx_ok ? mi_approx_low_background(mu, probs, L) : kNaN,
                                   mi_discrete_poisson(mu, mean_off, mean_on)};
    });
    check_finite(table);
    return table;
}

Table run_duty_imax(const ExperimentConfig& cfg) {
    const int L = cfg.samples;
    const double ts = cfg.effective_sampling_interval();
    const auto as = parse_grid(cfg.a_grid);
    Table table;
    table.header = {"A",          "mu_exact",   "mu_approx",  "mu_lower",   "mu_upper",
                    "imax_exact", "imax_lower", "imax_upper", "imax_approx"};
    table.rows = parallel_rows(as.size(), cfg.threads, [&](std::size_t i) {
        const double A = as[i];
        const auto probs = symbol_probs({A, cfg.background, cfg.dead_time, ts, L});
        const auto t = beta_triple(probs, L);
        const auto exact = mi_max_bruteforce(probs, L);
        const auto lower = maximize_scalar(
            [&](double mu) { return lower_envelope_best_alpha(mu, probs, L); }, 0.0, 1.0);
        const double mu_up = optimal_prior_upper(t);
        double mu_ap = kNaN, i_ap = kNaN;
        if (approximation_valid(probs, L)) {
            // With p0 > 0 the approximation diverges like -L p0 ln(mu) as mu -> 0, so its
            // maximum is searched away from the endpoints.
            const auto ap = maximize_scalar(
                [&](double mu) { return mi_approx_low_background(mu, probs, L); }, 0.1, 0.9);
            mu_ap = ap.x;
            i_ap = ap.value;
        }
        return std::vector<double>{A,           exact.mu, mu_ap, lower.x, mu_up, exact.i_max,
                                   lower.value, upper_envelope(mu_up, t), i_ap};
    });
    check_finite(table);
    return table;
}

Table run_gap(const ExperimentConfig& cfg) {
    const double tau = cfg.dead_time;
    const int L0 = cfg.samples;
    const std::string& sc = cfg.scenario;
    std::vector<double> xs = parse_grid(sc == "large-L"      ? cfg.l_grid
                                        : sc == "low-lambda" ? cfg.lambda_grid
                                                             : cfg.a_grid);
    if (sc == "large-L")
        for (double& x : xs) {
            const double r = std::round(x);
            if (r < 1 || std::abs(x - r) > 1e-9 * r)
                throw UsageError("L grid values must be positive integers");
            x = r;
        }

    // Gap at the limiting channel, used as the reference for the offset columns.
    double limit_gap = 0.0;
    if (sc == "large-A") {
        const BinaryDetectionProbs lim(detection_prob(cfg.background, tau), 1.0,
                                       miss_prob(cfg.background, tau), 0.0);
        limit_gap = bound_gap(beta_triple(lim, L0));
    } else if (sc == "low-lambda") {
        limit_gap = bound_gap(beta_triple(probs_for(cfg.peak_rate, 0.0, tau), L0));
    }

    Table table;
    table.header = {"x",          "gap_numeric",   "gap_lower_formula", "gap_upper_formula",
                    "offset_numeric", "offset_formula", "fitted_rate",  "predicted_rate"};
    table.rows = parallel_rows(xs.size(), cfg.threads, [&](std::size_t i) {
        const double x = xs[i];
        int L = L0;
        double A = cfg.peak_rate, lam = cfg.background;
        if (sc == "large-L")
            L = static_cast<int>(x);
        else if (sc == "low-lambda")
            lam = x;
        else
            A = x;
        if (sc == "zero-lambda")
            lam = 0.0;
        const auto pr = probs_for(A, lam, tau);
        const auto t = beta_triple(pr, L);
        const double g = bound_gap(t);
        const auto gb = gap_bounds(t);
        std::vector<double> row{x, g, gb.general_lower, kNaN, kNaN, kNaN, kNaN, kNaN};
        if (sc == "large-L") {
            row[3] = std::min(gb.low_snr_upper, gb.high_snr_upper);
            row[4] = g;
            row[5] = std::exp(-exp_rate_large_L(pr.p_off, pr.p_on) * L);
            row[7] = -exp_rate_large_L(pr.p_off, pr.p_on);
        } else if (sc == "large-A") {
            const auto off = gap_offsets_large_A(pr, L);
            row[3] = gb.high_snr_upper;
            row[4] = std::abs(g - limit_gap);
            row[5] = off.epsilon_u;
            row[7] = -std::min(0.5, pr.q_off * L) * tau;
        } else if (sc == "low-lambda") {
            const auto off = gap_offsets_low_background(pr, L);
            row[3] = gb.high_snr_upper;
            row[4] = g - limit_gap;
            row[5] = off.epsilon_u;
            row[7] = std::min(0.5, pr.p_on * L) * tau;
        } else if (sc == "zero-lambda") {
            const double dom = std::pow(pr.q_on, L / 2.0);
            row[2] = dom;
            row[3] = 2.0 * dom;
            row[4] = g;
            row[5] = dom;
            row[7] = -exp_rate_zero_background(L, tau);
        } else {  // low-A
            const double coeff = gap_quadratic_coeff_low_A(pr.p_off, L, tau);
            row[3] = gb.low_snr_upper;
            row[4] = g / (A * A);
            row[5] = coeff;
            row[7] = 2.0;
        }
        return row;
    });

    // One fitted rate for the whole sweep, repeated on every row.
    std::vector<XY> pts;
    for (const auto& r : table.rows) {
        if (sc == "low-lambda")
            pts.push_back({r[0], r[4]});
        else if (sc == "low-A")
            pts.push_back({std::log(r[0]), r[1] > 0.0 ? std::log(r[1]) : kNaN});
        else
            pts.push_back({r[0], sc == "large-A" ? r[4] : r[1]});
    }
    double fitted = kNaN;
    if (sc == "low-lambda") {
        fitted = fit_rate(pts, false);
    } else if (sc == "low-A") {
        std::erase_if(pts, [](const XY& p) { return std::isnan(p.y); });
        fitted = pts.size() >= 2 ? least_squares_slope(pts) : kNaN;
    } else {
        fitted = fit_rate(pts, true);
    }
    for (auto& r : table.rows)
        r[6] = fitted;
    check_finite(table);
    return table;
}

Table run_capacity(const ExperimentConfig& cfg) {
    const bool tau_sweep = !cfg.tau_grid.empty();
    const auto xs = parse_grid(tau_sweep ? cfg.tau_grid : cfg.a_grid);
    const double lam = cfg.background;
    Table table;
    table.header = {"A",             "tau",           "mu_star",      "capacity_nats",
                    "capacity_bits", "wyner_capacity", "approx_low_A", "limit_large_A"};
    table.rows = parallel_rows(xs.size(), cfg.threads, [&](std::size_t i) {
        const double A = tau_sweep ? cfg.peak_rate : xs[i];
        const double tau = tau_sweep ? xs[i] : cfg.dead_time;
        // T_s = tau unless a longer sampling interval is requested.
        const double ts = cfg.sampling_interval ? std::max(*cfg.sampling_interval, tau) : tau;
        const auto c = capacity_sampled(A, lam, tau, ts);
        const double scale = tau / ts;
        const double wyner = A > 0.0 ? wyner_poisson_capacity(A, lam).capacity : 0.0;
        const double low = lam == 0.0 ? A / std::numbers::e
                                      : quadratic_coeffs_low_A(lam, tau).d_tau * A * A;
        const double limit = asymptotic_capacity_coeff_large_A(lam, tau) / tau;
        return std::vector<double>{A,
                                   tau,
                                   c.duty_cycle,
                                   c.capacity_nats_per_time,
                                   c.capacity_bits_per_time(),
                                   wyner,
                                   low * scale,
                                   limit * scale};
    });
    check_finite(table);
    return table;
}

Table run_simulate(const ExperimentConfig& cfg) {
    const int L = cfg.samples;
    const double ts = cfg.effective_sampling_interval();
    SimConfig sim;
    sim.params = {cfg.peak_rate, cfg.background, cfg.dead_time, ts, L};
    sim.symbols = cfg.symbols;
    sim.seed = cfg.seed;
    sim.duty_cycle = 0.5;
    sim.validate();
    const SimPath path = parse_path(cfg.path);
    const auto probs = symbol_probs(sim.params);
    const double mi_exact = mi_binomial_mixture(sim.duty_cycle, probs, L);

    std::vector<std::int64_t> checkpoints;
    for (std::int64_t n = 10000; n < cfg.symbols; n *= 10)
        checkpoints.push_back(n);
    checkpoints.push_back(cfg.symbols);

    Table table;
    table.header = {"symbols",  "p0_hat", "p0_closed", "p1_hat",   "p1_closed",
                    "mi_plugin", "mi_exact", "z_p0",    "z_p1",     "z_mi",
                    "mi_bootstrap_se", "z_corr0", "z_corr1"};
    SimCounts counts;
    std::int64_t done = 0;
    for (std::int64_t n : checkpoints) {
        auto part = simulate_range(sim, done, n, path, cfg.threads);
        if (done == 0)
            counts = std::move(part);
        else
            counts.merge(part);
        done = n;
        const auto est = detection_estimate(counts);
        auto z = [](double hat, double ref, double se) {
            if (se > 0.0)
                return (hat - ref) / se;
            return hat == ref ? 0.0 : kNaN;
        };
        double mi_plugin = kNaN, se = kNaN, zmi = kNaN;
        if (n >= 10LL * (L + 1)) {
            mi_plugin = plugin_mi(counts);
            if (cfg.bootstrap >= 2) {
                try {
                    se = bootstrap_plugin_mi(counts, cfg.bootstrap, cfg.seed ^ 0x5bd1e995u,
                                             cfg.threads).std_error;
                    zmi = z(mi_plugin, mi_exact, se);
                } catch (const EstimationError&) {
                    // degenerate histogram: no spread to resample
                }
            }
        }
        table.rows.push_back({static_cast<double>(n), est.p0_hat, probs.p_off, est.p1_hat,
                              probs.p_on, mi_plugin, mi_exact,
                              z(est.p0_hat, probs.p_off, est.p0_stderr),
                              z(est.p1_hat, probs.p_on, est.p1_stderr), zmi, se,
                              L >= 2 ? adjacent_correlation_z(counts, 0) : kNaN,
                              L >= 2 ? adjacent_correlation_z(counts, 1) : kNaN});
    }
    check_finite(table);
    return table;
}

}  // namespace pcc
