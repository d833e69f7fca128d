#pragma once

#include "hdrv/image.hpp"

namespace hdrv {

// Per-sample fusion weights for an aligned high/low pair.
struct AttentionMaps {
    PixelBuffer w_high;
    PixelBuffer w_low;
};

// Weight floor: saturated or noise-dominated samples are never trusted
// fully, never zeroed (keeps the merge denominator positive).
inline constexpr double kAttentionFloor = 1e-4;
inline constexpr double kSaturationThreshold = 0.995;
inline constexpr double kDarkThreshold = 0.005;

// Well-exposedness hat weights, peaking at mid-tones. The high map is
// floored above the saturation threshold, the low map additionally below
// the dark threshold.
AttentionMaps attention_weights(const LdrFrame& high, const LdrFrame& low);

// Fuses an aligned high/low exposure pair into relative radiance:
// per sample, (w_h*H_h + w_l*H_l) / (w_h + w_l) with radiance from
// ldr_to_radiance and weights from attention_weights.
RadianceFrame merge_hdr(const LdrFrame& high, const LdrFrame& low, const Crf& crf = {});

} // namespace hdrv
