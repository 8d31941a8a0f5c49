#include "pcc/channel_model.hpp"

#include <cmath>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

void ChannelParams::validate() const {
    if (!(peak_rate >= 0.0))
        throw DomainError("peak_rate must be >= 0");
    if (!(background_rate >= 0.0))
        throw DomainError("background_rate must be >= 0");
    if (!(dead_time > 0.0) || !std::isfinite(dead_time))
        throw DomainError("dead_time must be finite and > 0");
    if (!(sampling_interval > 0.0) || !std::isfinite(sampling_interval))
        throw DomainError("sampling_interval must be finite and > 0");
    if (sampling_interval < dead_time)
        throw DomainError("sampling_interval must be >= dead_time (got T_s=" +
                          std::to_string(sampling_interval) +
                          ", tau=" + std::to_string(dead_time) + ")");
    if (samples_per_symbol < 1)
        throw DomainError("samples_per_symbol must be >= 1");
}

ChannelParams ChannelParams::normalized(double peak_rate, double background_rate,
                                        double dead_time, int samples_per_symbol) {
    if (samples_per_symbol < 1)
        throw DomainError("samples_per_symbol must be >= 1");
    ChannelParams p;
    p.peak_rate = peak_rate;
    p.background_rate = background_rate;
    p.dead_time = dead_time;
    p.samples_per_symbol = samples_per_symbol;
    p.sampling_interval = 1.0 / samples_per_symbol;
    return p;
}

double detection_prob(double rate, double dead_time) {
    if (!(rate >= 0.0))
        throw DomainError("detection_prob: rate must be >= 0");
    if (!(dead_time > 0.0))
        throw DomainError("detection_prob: dead_time must be > 0");
    if (std::isinf(rate))
        return 1.0;
    return -std::expm1(-rate * dead_time);
}

double miss_prob(double rate, double dead_time) {
    if (!(rate >= 0.0))
        throw DomainError("miss_prob: rate must be >= 0");
    if (!(dead_time > 0.0))
        throw DomainError("miss_prob: dead_time must be > 0");
    if (std::isinf(rate))
        return 0.0;
    return std::exp(-rate * dead_time);
}

void BinaryDetectionProbs::validate() const {
    auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in01(p_off) || !in01(p_on) || !in01(q_off) || !in01(q_on))
        throw DomainError("detection probabilities must lie in [0,1]");
}

BinaryDetectionProbs symbol_probs(const ChannelParams& params) {
    params.validate();
    const double tau = params.dead_time;
    const double on_rate = params.peak_rate + params.background_rate;
    return {detection_prob(params.background_rate, tau), detection_prob(on_rate, tau),
            miss_prob(params.background_rate, tau), miss_prob(on_rate, tau)};
}

}  // namespace pcc
