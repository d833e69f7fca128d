#pragma once

#include "hdrv/image.hpp"

namespace hdrv {

struct MuLawParams {
    double mu = 5000.0;
};

struct ReinhardParams {
    double key_value = 0.18;
    double epsilon = 1e-6; // log-mean guard
};

// Divides by reference_max and clamps to [0,1].
RadianceFrame normalize_radiance(const RadianceFrame& frame, double reference_max);

// Logarithmic range compression T(x) = log(1 + mu*x) / log(1 + mu) on
// normalized radiance in [0,1].
PixelBuffer mu_law(const RadianceFrame& frame, const MuLawParams& params = {});

// Global photographic operator for display: luminance scaled to the key
// value via the log mean, mapped L/(1+L) with color ratios preserved,
// gamma-encoded and quantized to 8 bits.
LdrFrame reinhard_display(const RadianceFrame& frame, const ReinhardParams& params = {},
                          double display_gamma = 2.2);

// Largest sample of a frame (0 for an empty buffer).
double max_radiance(const RadianceFrame& frame);

} // namespace hdrv
