#include "hdrv/tonemap.hpp"

#include <algorithm>

#include "hdrv/kernels.hpp"

namespace hdrv {

RadianceFrame normalize_radiance(const RadianceFrame& frame, double reference_max) {
    if (!(reference_max > 0.0) || !std::isfinite(reference_max))
        raise(ErrorCode::invalid_parameter, "normalize_radiance: reference_max must be > 0");
    validate_radiance(frame);
    RadianceFrame out;
    kernels::normalize_clamp(frame.pixels, reference_max, out.pixels);
    return out;
}

PixelBuffer mu_law(const RadianceFrame& frame, const MuLawParams& params) {
    if (!(params.mu > 0.0) || !std::isfinite(params.mu))
        raise(ErrorCode::invalid_parameter, "mu_law: mu must be > 0");
    for (float v : frame.pixels.data)
        if (!(v >= 0.0f && v <= 1.0f))
            raise(ErrorCode::invalid_input, "mu_law: input sample outside [0,1]");
    PixelBuffer out;
    kernels::mu_law_map(frame.pixels, params.mu, out);
    return out;
}

LdrFrame reinhard_display(const RadianceFrame& frame, const ReinhardParams& params,
                          double display_gamma) {
    if (!(params.key_value > 0.0))
        raise(ErrorCode::invalid_parameter, "reinhard_display: key_value must be > 0");
    if (frame.pixels.pixel_count() == 0)
        raise(ErrorCode::invalid_input, "reinhard_display: zero-area frame");
    validate_radiance(frame);

    Plane lum;
    kernels::luminance(frame.pixels, lum);
    const double log_mean = kernels::log_mean_luminance(lum, params.epsilon);
    const double scale = params.key_value / log_mean;

    LdrFrame out;
    out.exposure_time = 1.0;
    out.tag = ExposureTag::High;
    out.bit_depth = BitDepth::b8;
    kernels::reinhard_map(frame.pixels, lum, scale, display_gamma, out.pixels);
    return out;
}

double max_radiance(const RadianceFrame& frame) {
    double m = 0.0;
    for (float v : frame.pixels.data) m = std::max(m, static_cast<double>(v));
    return m;
}

} // namespace hdrv
