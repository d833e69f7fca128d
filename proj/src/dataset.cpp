#include "hdrv/dataset.hpp"

#include "hdrv/radiometry.hpp"
#include "hdrv/rng.hpp"

namespace hdrv {

namespace {

void validate_program(const ExposureProgram& program) {
    if (!(program.base_high_exposure > 0.0))
        raise(ErrorCode::invalid_parameter, "exposure program: base exposure must be > 0");
    if (program.stops < 1 || program.stops > 3)
        raise(ErrorCode::invalid_parameter, "exposure program: stops must be 1, 2 or 3");
}

PixelBuffer crop(const PixelBuffer& src, int x0, int y0, int size) {
    PixelBuffer out(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            for (int c = 0; c < 3; ++c) out.at(x, y, c) = src.at(x0 + x, y0 + y, c);
    return out;
}

PixelBuffer rotate90_cw(const PixelBuffer& src) {
    PixelBuffer out(src.height, src.width);
    for (int y = 0; y < src.height; ++y)
        for (int x = 0; x < src.width; ++x)
            for (int c = 0; c < 3; ++c) out.at(src.height - 1 - y, x, c) = src.at(x, y, c);
    return out;
}

PixelBuffer flip_h(const PixelBuffer& src) {
    PixelBuffer out(src.width, src.height);
    for (int y = 0; y < src.height; ++y)
        for (int x = 0; x < src.width; ++x)
            for (int c = 0; c < 3; ++c) out.at(src.width - 1 - x, y, c) = src.at(x, y, c);
    return out;
}

PixelBuffer flip_v(const PixelBuffer& src) {
    PixelBuffer out(src.width, src.height);
    for (int y = 0; y < src.height; ++y)
        for (int x = 0; x < src.width; ++x)
            for (int c = 0; c < 3; ++c) out.at(x, src.height - 1 - y, c) = src.at(x, y, c);
    return out;
}

PixelBuffer augment_buffer(PixelBuffer buf, const Patch& patch) {
    if (patch.rotate90) buf = rotate90_cw(buf);
    if (patch.hflip) buf = flip_h(buf);
    if (patch.vflip) buf = flip_v(buf);
    return buf;
}

} // namespace

namespace {

// Noise lands on the continuous samples; quantization happens afterwards,
// as a sensor would apply it.
void apply_sensor_noise(LdrFrame& frame, const SensorNoise& noise, std::uint64_t frame_index,
                        BitDepth target_depth) {
    const std::size_t samples = frame.pixels.sample_count();
    const std::uint64_t base = frame_index * static_cast<std::uint64_t>(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        double v = frame.pixels.data[s] +
                   noise.sigma * counter_gaussian(noise.seed, base + static_cast<std::uint64_t>(s));
        v = std::clamp(v, 0.0, 1.0);
        const long levels = quant_levels(target_depth);
        if (levels > 0) v = std::floor(v * static_cast<double>(levels) + 0.5) / levels;
        frame.pixels.data[s] = static_cast<float>(v);
    }
    frame.bit_depth = target_depth;
}

} // namespace

SimulatedSequence simulate_alternating(const std::vector<RadianceFrame>& hdr_seq,
                                       const ExposureProgram& program, BitDepth bit_depth,
                                       const Crf& crf, const SensorNoise& noise) {
    validate_program(program);
    if (hdr_seq.empty())
        raise(ErrorCode::invalid_input, "simulate_alternating: empty ground-truth sequence");
    if (noise.sigma < 0.0)
        raise(ErrorCode::invalid_parameter, "simulate_alternating: negative noise sigma");

    std::vector<LdrFrame> frames;
    frames.reserve(hdr_seq.size());
    for (std::size_t i = 0; i < hdr_seq.size(); ++i) {
        const ExposureTag tag = (i % 2 == 0) ? program.start_tag : opposite(program.start_tag);
        const double dt =
            tag == ExposureTag::High ? program.base_high_exposure : program.low_exposure();
        if (noise.sigma > 0.0) {
            LdrFrame frame = radiance_to_ldr(hdr_seq[i], dt, crf, BitDepth::unquantized, tag);
            apply_sensor_noise(frame, noise, static_cast<std::uint64_t>(i), bit_depth);
            frames.push_back(std::move(frame));
        } else {
            frames.push_back(radiance_to_ldr(hdr_seq[i], dt, crf, bit_depth, tag));
        }
    }

    SimulatedSequence out;
    out.sequence = AlternatingSequence::from_frames(std::move(frames));
    out.program = program;
    return out;
}

PatchSet patchify(const AlternatingSequence& seq, const std::vector<RadianceFrame>& gt,
                  std::size_t count, int patch_size, std::uint64_t seed, bool augment) {
    if (seq.size() < 3)
        raise(ErrorCode::too_short, "patchify: sequence needs at least 3 frames");
    if (gt.size() != seq.size())
        raise(ErrorCode::invalid_input, "patchify: ground truth count differs from sequence");
    const int w = seq.frames[0].pixels.width;
    const int h = seq.frames[0].pixels.height;
    if (w < patch_size || h < patch_size)
        raise(ErrorCode::invalid_input, "patchify: frames smaller than the patch size");

    PatchSet set;
    set.patch_size = patch_size;
    set.augmented = augment;
    set.patches.reserve(count);

    const std::uint64_t triplets = seq.size() - 2;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * 6;
        Patch patch;
        patch.triplet_start = counter_below(seed, base, triplets);
        patch.x0 = static_cast<int>(counter_below(seed, base + 1, w - patch_size + 1));
        patch.y0 = static_cast<int>(counter_below(seed, base + 2, h - patch_size + 1));
        if (augment) {
            patch.rotate90 = counter_bits(seed, base + 3) & 1;
            patch.hflip = counter_bits(seed, base + 4) & 1;
            patch.vflip = counter_bits(seed, base + 5) & 1;
        }
        for (std::size_t f = 0; f < 3; ++f) {
            const std::size_t idx = patch.triplet_start + f;
            LdrFrame ldr = seq.frames[idx];
            ldr.pixels = augment_buffer(crop(ldr.pixels, patch.x0, patch.y0, patch_size), patch);
            patch.ldr.push_back(std::move(ldr));

            RadianceFrame rad;
            rad.pixels = augment_buffer(crop(gt[idx].pixels, patch.x0, patch.y0, patch_size), patch);
            patch.gt.push_back(std::move(rad));
        }
        set.patches.push_back(std::move(patch));
    }
    return set;
}

} // namespace hdrv
