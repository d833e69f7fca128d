#pragma once

#include <cstdint>
#include <vector>

#include "hdrv/pipeline.hpp"
#include "hdrv/scene.hpp"

namespace hdrv {

// Exposure schedule for simulated alternating capture. The low exposure is
// `stops` factors of two below the base high exposure.
struct ExposureProgram {
    double base_high_exposure = 1.0; // seconds
    int stops = 3;                   // in {1, 2, 3}
    ExposureTag start_tag = ExposureTag::High;

    double low_exposure() const { return base_high_exposure / static_cast<double>(1 << stops); }
};

struct SimulatedSequence {
    AlternatingSequence sequence;
    ExposureProgram program;
};

// Optional additive Gaussian sensor noise on the LDR samples, applied
// before quantization. Disabled by default.
struct SensorNoise {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

// Exposes each ground-truth radiance frame with the alternating schedule.
SimulatedSequence simulate_alternating(const std::vector<RadianceFrame>& hdr_seq,
                                       const ExposureProgram& program,
                                       BitDepth bit_depth = BitDepth::b16, const Crf& crf = {},
                                       const SensorNoise& noise = {});

struct Patch {
    std::size_t triplet_start = 0; // index of the first frame of the LDR triplet
    int x0 = 0;
    int y0 = 0;
    bool rotate90 = false;
    bool hflip = false;
    bool vflip = false;
    std::vector<LdrFrame> ldr;      // three consecutive crops
    std::vector<RadianceFrame> gt;  // matching ground-truth crops
};

struct PatchSet {
    int patch_size = 256;
    bool augmented = false;
    std::vector<Patch> patches;
};

// Draws `count` aligned LDR-triplet / ground-truth crops. Offsets, triplet
// positions and augmentations come from a counter-based generator, so a
// fixed seed reproduces the set exactly regardless of evaluation order.
// The same crop and augmentation are applied to every frame of a patch.
PatchSet patchify(const AlternatingSequence& seq, const std::vector<RadianceFrame>& gt,
                  std::size_t count, int patch_size, std::uint64_t seed, bool augment);

} // namespace hdrv
