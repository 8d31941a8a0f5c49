#include "pcc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "pcc/errors.hpp"

namespace pcc {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

unsigned resolve_threads(unsigned threads, std::int64_t work) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t cap = std::max<std::int64_t>(1, work / 4096);
    return static_cast<unsigned>(std::min<std::int64_t>(threads, cap));
}

// Writes Z_1..Z_L into out, which must hold L entries.
void fill_symbol(int bit, const ChannelParams& params, SymbolRng& rng, SimPath path,
                 std::uint8_t* out) {
    const int L = params.samples_per_symbol;
    const double tau = params.dead_time;
    const double rate = bit * params.peak_rate + params.background_rate;
    std::fill(out, out + L, std::uint8_t{0});
    if (rate == 0.0)
        return;
    if (path == SimPath::Bernoulli) {
        const double p = detection_prob(rate, tau);
        for (int i = 0; i < L; ++i)
            out[i] = rng.uniform() < p ? 1 : 0;
        return;
    }
    // Only the windows (i T_s - tau, i T_s] matter, so arrivals are generated on
    // their concatenation, a line of length L*tau. Once a window holds an
    // arrival the remainder of it is irrelevant; by memorylessness the process
    // restarts at the next window boundary.
    const double end = L * tau;
    double t = 0.0;
    while (true) {
        t += rng.exponential(rate);
        if (!(t < end))
            break;
        const int w = std::min(L - 1, static_cast<int>(t / tau));
        out[w] = 1;
        t = (w + 1) * tau;
    }
}

void accumulate(SimCounts& c, int bit, const std::uint8_t* z, int L) {
    int n = 0, pairs = 0;
    for (int i = 0; i < L; ++i) {
        n += z[i];
        if (i + 1 < L)
            pairs += z[i] & z[i + 1];
    }
    c.symbols[bit] += 1;
    c.detections[bit] += n;
    c.adjacent_ones[bit] += pairs;
    c.histogram[bit][n] += 1;
}

SimCounts empty_counts(int L) {
    SimCounts c;
    c.trials = L;
    c.histogram[0].assign(L + 1, 0);
    c.histogram[1].assign(L + 1, 0);
    return c;
}

std::uint64_t path_salt(SimPath path) {
    return path == SimPath::Bernoulli ? 0 : 0xA5A5A5A5A5A5A5A5ULL;
}

}  // namespace

void SimConfig::validate() const {
    params.validate();
    if (symbols < 1)
        throw DomainError("symbols must be >= 1");
    if (!(duty_cycle >= 0.0 && duty_cycle <= 1.0))
        throw DomainError("duty_cycle must lie in [0,1]");
}

SymbolRng::SymbolRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream + kGolden))) {}

std::uint64_t SymbolRng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double SymbolRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SymbolRng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

std::vector<std::uint8_t> simulate_symbol(int bit, const ChannelParams& params, SymbolRng& rng,
                                          SimPath path) {
    params.validate();
    if (bit != 0 && bit != 1)
        throw DomainError("symbol must be 0 or 1");
    std::vector<std::uint8_t> z(params.samples_per_symbol);
    fill_symbol(bit, params, rng, path, z.data());
    return z;
}

void SimCounts::merge(const SimCounts& other) {
    if (histogram[0].empty()) {
        *this = other;
        return;
    }
    for (int x = 0; x < 2; ++x) {
        symbols[x] += other.symbols[x];
        detections[x] += other.detections[x];
        adjacent_ones[x] += other.adjacent_ones[x];
        for (std::size_t k = 0; k < histogram[x].size(); ++k)
            histogram[x][k] += other.histogram[x][k];
    }
}

SimCounts simulate_range(const SimConfig& cfg, std::int64_t first, std::int64_t last,
                         SimPath path, unsigned threads) {
    cfg.validate();
    const int L = cfg.params.samples_per_symbol;
    const std::uint64_t seed = cfg.seed ^ path_salt(path);
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
        SimCounts c = empty_counts(L);
        std::vector<std::uint8_t> z(L);
        for (std::int64_t s = lo; s < hi; ++s) {
            SymbolRng rng(seed, static_cast<std::uint64_t>(s));
            const int bit = rng.uniform() < cfg.duty_cycle ? 1 : 0;
            fill_symbol(bit, cfg.params, rng, path, z.data());
            accumulate(c, bit, z.data(), L);
        }
        return c;
    };
    const std::int64_t n = std::max<std::int64_t>(0, last - first);
    const unsigned nt = resolve_threads(threads, n);
    if (nt <= 1)
        return worker(first, first + n);

    std::vector<SimCounts> parts(nt);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
        const std::int64_t lo = first + n * t / nt;
        const std::int64_t hi = first + n * (t + 1) / nt;
        pool.emplace_back([&, t, lo, hi] { parts[t] = worker(lo, hi); });
    }
    for (auto& th : pool)
        th.join();
    SimCounts total = empty_counts(L);
    for (const auto& p : parts)
        total.merge(p);
    return total;
}

SimCounts simulate(const SimConfig& cfg, SimPath path, unsigned threads) {
    return simulate_range(cfg, 0, cfg.symbols, path, threads);
}

DetectionEstimate detection_estimate(const SimCounts& counts) {
    if (counts.symbols[0] == 0 || counts.symbols[1] == 0)
        throw EstimationError("both input symbols must be observed at least once");
    DetectionEstimate e;
    auto est = [&](int x, double& p, double& se) {
        const double windows = static_cast<double>(counts.symbols[x]) * counts.trials;
        p = counts.detections[x] / windows;
        se = std::sqrt(p * (1.0 - p) / windows);
    };
    est(0, e.p0_hat, e.p0_stderr);
    est(1, e.p1_hat, e.p1_stderr);
    return e;
}

DetectionEstimate estimate_detection_probs(const SimConfig& cfg) {
    return detection_estimate(simulate(cfg));
}

double plugin_mi(const SimCounts& counts) {
    const double n = static_cast<double>(counts.symbols[0] + counts.symbols[1]);
    if (n == 0.0)
        throw EstimationError("no symbols simulated");
    double mi = 0.0;
    for (int k = 0; k <= counts.trials; ++k) {
        const double nk = static_cast<double>(counts.histogram[0][k] + counts.histogram[1][k]);
        for (int x = 0; x < 2; ++x) {
            const double nxk = static_cast<double>(counts.histogram[x][k]);
            if (nxk > 0.0)
                mi += nxk / n * std::log(nxk * n / (nk * counts.symbols[x]));
        }
    }
    return std::max(mi, 0.0);
}

double estimate_mi_plugin(const SimConfig& cfg) {
    cfg.validate();
    if (cfg.symbols < 10LL * (cfg.params.samples_per_symbol + 1))
        throw EstimationError("plug-in MI needs at least 10*(L+1) symbols");
    return plugin_mi(simulate(cfg));
}

BootstrapResult bootstrap_plugin_mi(const SimCounts& counts, int replicates, std::uint64_t seed,
                                    unsigned threads) {
    if (replicates < 2)
        throw DomainError("bootstrap needs at least two replicates");
    const int L = counts.trials;
    const std::int64_t n = counts.symbols[0] + counts.symbols[1];
    if (n == 0)
        throw EstimationError("no symbols simulated");

    // Cumulative distribution over the 2(L+1) cells (x, k).
    std::vector<double> cdf;
    cdf.reserve(2 * (L + 1));
    double acc = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int k = 0; k <= L; ++k) {
            acc += static_cast<double>(counts.histogram[x][k]);
            cdf.push_back(acc / n);
        }
    cdf.back() = 1.0;

    std::vector<double> values(replicates);
    auto one = [&](int r) {
        SimCounts c = empty_counts(L);
        SymbolRng rng(seed, static_cast<std::uint64_t>(r));
        for (std::int64_t i = 0; i < n; ++i) {
            const double u = rng.uniform();
            const auto cell = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
            const int x = static_cast<int>(cell) / (L + 1);
            const int k = static_cast<int>(cell) % (L + 1);
            c.symbols[x] += 1;
            c.histogram[x][k] += 1;
        }
        values[r] = plugin_mi(c);
    };
    const unsigned nt = std::min<unsigned>(resolve_threads(threads, n * replicates),
                                           static_cast<unsigned>(replicates));
    if (nt <= 1) {
        for (int r = 0; r < replicates; ++r)
            one(r);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (int r = static_cast<int>(t); r < replicates; r += static_cast<int>(nt))
                    one(r);
            });
        for (auto& th : pool)
            th.join();
    }

    BootstrapResult b;
    for (double v : values)
        b.mean += v;
    b.mean /= replicates;
    double ss = 0.0;
    for (double v : values)
        ss += (v - b.mean) * (v - b.mean);
    b.std_error = std::sqrt(ss / (replicates - 1));
    return b;
}

double window_homogeneity_pvalue(const SimCounts& a, const SimCounts& b) {
    if (a.trials != b.trials)
        throw DomainError("runs must share the number of samples per symbol");
    // One 2x2 table (run x {Z=0, Z=1}) per input class. Windows are i.i.d. only
    // given the class; the class totals themselves move in blocks of L windows.
    double chi2 = 0.0;
    int dof = 0;
    for (int x = 0; x < 2; ++x) {
        const double ones[2] = {static_cast<double>(a.detections[x]),
                                static_cast<double>(b.detections[x])};
        const double windows[2] = {static_cast<double>(a.symbols[x]) * a.trials,
                                   static_cast<double>(b.symbols[x]) * b.trials};
        const double n = windows[0] + windows[1];
        const double col1 = ones[0] + ones[1];
        const double col0 = n - col1;
        if (windows[0] == 0.0 || windows[1] == 0.0 || col0 == 0.0 || col1 == 0.0)
            continue;
        ++dof;
        for (int r = 0; r < 2; ++r) {
            const double e1 = windows[r] * col1 / n, e0 = windows[r] * col0 / n;
            const double o1 = ones[r], o0 = windows[r] - ones[r];
            chi2 += (o1 - e1) * (o1 - e1) / e1 + (o0 - e0) * (o0 - e0) / e0;
        }
    }
    if (dof == 0)
        return 1.0;
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, chi2));
}

double adjacent_correlation_z(const SimCounts& counts, int x) {
    if (x != 0 && x != 1)
        throw DomainError("class must be 0 or 1");
    const int L = counts.trials;
    if (L < 2 || counts.symbols[x] == 0)
        throw EstimationError("adjacent-window correlation needs L >= 2 and observed symbols");
    const double windows = static_cast<double>(counts.symbols[x]) * L;
    const double pairs = static_cast<double>(counts.symbols[x]) * (L - 1);
    const double p = counts.detections[x] / windows;
    if (p <= 0.0 || p >= 1.0)
        return 0.0;
    const double r = (counts.adjacent_ones[x] / pairs - p * p) / (p * (1.0 - p));
    return r * std::sqrt(pairs);
}

}  // namespace pcc
