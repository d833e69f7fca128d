#pragma once

#include "hdrv/image.hpp"

namespace hdrv {

// Inverts the power-law camera response: H = v^gamma / exposure_time.
RadianceFrame ldr_to_radiance(const LdrFrame& frame, const Crf& crf = {});

// Simulates LDR formation: v = clip((H * exposure_time)^(1/gamma), 0, 1),
// quantized to the requested bit depth. The caller assigns the tag.
LdrFrame radiance_to_ldr(const RadianceFrame& frame, double exposure_time, const Crf& crf = {},
                         BitDepth bit_depth = BitDepth::unquantized,
                         ExposureTag tag = ExposureTag::High);

} // namespace hdrv
