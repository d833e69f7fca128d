#pragma once

#include <filesystem>

#include "hdrv/image.hpp"

namespace hdrv {

// Portable FloatMap, color variant ("PF"): header "PF\n<w> <h>\n<scale>\n",
// rows stored bottom-to-top, 32-bit floats. A negative scale marks
// little-endian payload. Writes are little-endian with scale -1.0 and round
// trip bit-exactly.
RadianceFrame read_pfm(const std::filesystem::path& path);
void write_pfm(const std::filesystem::path& path, const RadianceFrame& frame);

} // namespace hdrv
