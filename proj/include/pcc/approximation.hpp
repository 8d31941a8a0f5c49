#pragma once

#include "pcc/channel_model.hpp"

namespace pcc {

// True when the low-background expansion can be evaluated: L*p0 < 1 and 0 < p1 < 1.
bool approximation_valid(const BinaryDetectionProbs& probs, int trials);

// Medium-SNR approximation of I(X; N-hat) for weak background light, with the
// o(L p0) and O(1/L) remainders dropped. Exact when p0 = 0.
// Throws DomainError outside the validity region; returns 0 at mu = 0 or 1.
double mi_approx_low_background(double mu, const BinaryDetectionProbs& probs, int trials);

}  // namespace pcc
