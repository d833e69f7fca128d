#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hdrv/error.hpp"

namespace hdrv {

// Interleaved RGB float buffer, row-major. Math is done in double; storage
// is single precision (PFM-compatible).
struct PixelBuffer {
    static constexpr int channels = 3;

    int width = 0;
    int height = 0;
    std::vector<float> data;

    PixelBuffer() = default;
    PixelBuffer(int w, int h, float fill = 0.0f)
        : width(w), height(h),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * channels, fill) {
        if (w < 0 || h < 0)
            raise(ErrorCode::invalid_parameter, "negative image dimensions");
    }

    std::size_t sample_count() const { return data.size(); }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    float& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    float* row(int y) { return data.data() + static_cast<std::size_t>(y) * width * channels; }
    const float* row(int y) const {
        return data.data() + static_cast<std::size_t>(y) * width * channels;
    }

    bool same_shape(const PixelBuffer& other) const {
        return width == other.width && height == other.height;
    }

    bool all_finite() const {
        for (float v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

// Single-channel float plane (luminance, weights, visibility).
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    Plane() = default;
    Plane(int w, int h, float fill = 0.0f)
        : width(w), height(h),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

enum class ExposureTag : std::uint8_t { High, Low };

inline char tag_letter(ExposureTag t) { return t == ExposureTag::High ? 'H' : 'L'; }
inline ExposureTag opposite(ExposureTag t) {
    return t == ExposureTag::High ? ExposureTag::Low : ExposureTag::High;
}

enum class BitDepth : std::uint8_t { b8, b16, unquantized };

// Quantization levels minus one (0 means continuous samples).
inline long quant_levels(BitDepth d) {
    switch (d) {
        case BitDepth::b8: return 255;
        case BitDepth::b16: return 65535;
        default: return 0;
    }
}

// Gamma-encoded LDR frame; samples in [0,1].
struct LdrFrame {
    PixelBuffer pixels;
    double exposure_time = 1.0; // seconds
    ExposureTag tag = ExposureTag::High;
    BitDepth bit_depth = BitDepth::unquantized;
};

// Linear-domain relative radiance; samples >= 0, finite.
struct RadianceFrame {
    PixelBuffer pixels;
};

// Power-law camera response.
struct Crf {
    double gamma = 2.2;
};

inline void require_same_shape(const PixelBuffer& a, const PixelBuffer& b,
                               const char* what) {
    if (!a.same_shape(b))
        raise(ErrorCode::shape_mismatch, std::string(what) + ": buffer dimensions differ");
}

// Validates the LdrFrame invariants (samples finite and inside [0,1]).
void validate_ldr(const LdrFrame& frame);

// Validates the RadianceFrame invariants (samples finite and >= 0).
void validate_radiance(const RadianceFrame& frame);

} // namespace hdrv
