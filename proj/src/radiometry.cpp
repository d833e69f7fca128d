#include "hdrv/radiometry.hpp"

#include "hdrv/kernels.hpp"

namespace hdrv {

void validate_ldr(const LdrFrame& frame) {
    if (frame.pixels.data.size() != frame.pixels.pixel_count() * PixelBuffer::channels)
        raise(ErrorCode::invalid_input, "LDR frame: buffer size does not match dimensions");
    if (frame.exposure_time <= 0.0 || !std::isfinite(frame.exposure_time))
        raise(ErrorCode::invalid_parameter, "LDR frame: exposure time must be positive");
    for (float v : frame.pixels.data)
        if (!(v >= 0.0f && v <= 1.0f))
            raise(ErrorCode::invalid_input, "LDR frame: sample outside [0,1] or non-finite");
}

void validate_radiance(const RadianceFrame& frame) {
    if (frame.pixels.data.size() != frame.pixels.pixel_count() * PixelBuffer::channels)
        raise(ErrorCode::invalid_input, "radiance frame: buffer size does not match dimensions");
    for (float v : frame.pixels.data)
        if (!(v >= 0.0f) || !std::isfinite(v))
            raise(ErrorCode::invalid_input, "radiance frame: sample negative or non-finite");
}

namespace {
void validate_crf(const Crf& crf) {
    if (!(crf.gamma > 0.0) || !std::isfinite(crf.gamma))
        raise(ErrorCode::invalid_parameter, "camera response: gamma must be positive");
}
} // namespace

RadianceFrame ldr_to_radiance(const LdrFrame& frame, const Crf& crf) {
    validate_crf(crf);
    validate_ldr(frame);
    RadianceFrame out;
    kernels::delinearize(frame.pixels, crf.gamma, frame.exposure_time, out.pixels);
    return out;
}

LdrFrame radiance_to_ldr(const RadianceFrame& frame, double exposure_time, const Crf& crf,
                         BitDepth bit_depth, ExposureTag tag) {
    validate_crf(crf);
    if (exposure_time <= 0.0 || !std::isfinite(exposure_time))
        raise(ErrorCode::invalid_parameter, "exposure time must be positive");
    validate_radiance(frame);
    LdrFrame out;
    out.exposure_time = exposure_time;
    out.tag = tag;
    out.bit_depth = bit_depth;
    kernels::expose(frame.pixels, crf.gamma, exposure_time, quant_levels(bit_depth), out.pixels);
    return out;
}

} // namespace hdrv
