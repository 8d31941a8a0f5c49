#include "pcc/approximation.hpp"

#include <cmath>

#include "pcc/errors.hpp"
#include "pcc/mutual_info.hpp"

namespace pcc {

bool approximation_valid(const BinaryDetectionProbs& probs, int trials) {
    return trials >= 1 && trials * probs.p_off < 1.0 && probs.p_on > 0.0 && probs.q_on > 0.0;
}

double mi_approx_low_background(double mu, const BinaryDetectionProbs& probs, int trials) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("mu must lie in [0,1]");
    probs.validate();
    if (!approximation_valid(probs, trials))
        throw DomainError("approximation outside validity region (need L*p0 < 1, 0 < p1 < 1)");
    if (mu == 0.0 || mu == 1.0)
        return 0.0;

    const double L = trials;
    const double lp0 = L * probs.p_off;
    const double log_y = std::log(probs.q_on);
    const double yL = std::exp(L * log_y);
    const double m = mu * yL + 1.0 - mu;
    const double log_m = std::log(m);

    double value = -m * log_m + mu * L * yL * log_y + mu * std::expm1(L * log_y) * std::log(mu);
    if (lp0 > 0.0) {
        value += (1.0 - mu) * lp0 *
                 (log_m - std::log(mu * L * probs.p_on) - (L - 1.0) * log_y);
        value -= (1.0 - mu) * binary_entropy(lp0);
    }
    return value;
}

}  // namespace pcc
