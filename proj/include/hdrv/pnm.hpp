#pragma once

#include <filesystem>

#include "hdrv/image.hpp"

namespace hdrv {

// Binary PPM ("P6") with maxval 255 or 65535; 16-bit samples are stored
// big-endian per the Netpbm convention. Values map linearly between [0,1]
// and [0,maxval] with round-half-up quantization.
LdrFrame read_pnm(const std::filesystem::path& path, double exposure_time = 1.0,
                  ExposureTag tag = ExposureTag::High);
void write_pnm(const std::filesystem::path& path, const LdrFrame& frame, int maxval);

} // namespace hdrv
