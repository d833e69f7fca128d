#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hdrv/pipeline.hpp"

namespace hdrv {

// One row per frame. The tag is empty for merged outputs that have no
// captured constituent (fractional timestamps).
struct ManifestRecord {
    std::int64_t index = 0;
    Timestamp timestamp;
    std::string filename;
    double exposure_time_s = 0.0;
    std::optional<ExposureTag> tag;
    FrameProvenance provenance;
    int stops = 0;
};

struct Manifest {
    std::vector<ManifestRecord> records;
};

// CSV with a fixed header row, UTF-8, LF line endings and canonical field
// formatting; writes are deterministic and read/write round trips exactly.
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

} // namespace hdrv
