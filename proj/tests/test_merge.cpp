#include <doctest.h>

#include <cmath>

#include "hdrv/kernels.hpp"
#include "hdrv/merge.hpp"
#include "hdrv/radiometry.hpp"
#include "test_util.hpp"

using namespace hdrv;
using namespace hdrv::testutil;

namespace {

// Builds a physically consistent high/low pair from one radiance field.
struct ExposedPair {
    LdrFrame high;
    LdrFrame low;
};

ExposedPair expose_pair(const RadianceFrame& radiance, double dt_high, int stops,
                        BitDepth depth = BitDepth::unquantized) {
    ExposedPair pair;
    pair.high = radiance_to_ldr(radiance, dt_high, {}, depth, ExposureTag::High);
    pair.low = radiance_to_ldr(radiance, dt_high / (1 << stops), {}, depth, ExposureTag::Low);
    return pair;
}

} // namespace

TEST_SUITE("merge") {

TEST_CASE("attention hat weights") {
    PixelBuffer vals(5, 1, 0.0f);
    vals.at(0, 0, 0) = 0.5f;
    vals.at(1, 0, 0) = 1.0f;
    vals.at(2, 0, 0) = 0.25f;
    vals.at(3, 0, 0) = 0.996f;
    vals.at(4, 0, 0) = 0.75f;
    const LdrFrame high = make_ldr(vals, 1.0, ExposureTag::High);
    const LdrFrame low = make_ldr(vals, 0.25, ExposureTag::Low);

    const AttentionMaps maps = attention_weights(high, low);
    CHECK(maps.w_high.at(0, 0, 0) == 1.0f);
    CHECK(maps.w_high.at(1, 0, 0) == doctest::Approx(1e-4));
    CHECK(maps.w_high.at(2, 0, 0) == 0.5f);
    CHECK(maps.w_high.at(3, 0, 0) == doctest::Approx(1e-4)); // saturation override
    CHECK(maps.w_high.at(4, 0, 0) == 0.5f);

    SUBCASE("low map floors noise-dominated samples") {
        PixelBuffer dark(2, 1, 0.0f);
        dark.at(0, 0, 0) = 0.004f;
        dark.at(1, 0, 0) = 0.01f;
        const LdrFrame low_dark = make_ldr(dark, 0.25, ExposureTag::Low);
        const LdrFrame high_any = make_ldr(uniform_buffer(2, 1, 0.5f), 1.0, ExposureTag::High);
        const AttentionMaps m = attention_weights(high_any, low_dark);
        CHECK(m.w_low.at(0, 0, 0) == doctest::Approx(1e-4));
        CHECK(m.w_low.at(1, 0, 0) == 0.02f);
        // The high map keeps its hat value at the same sample level.
        const LdrFrame high_dark = make_ldr(dark, 1.0, ExposureTag::High);
        const LdrFrame low_any = make_ldr(uniform_buffer(2, 1, 0.5f), 0.25, ExposureTag::Low);
        const AttentionMaps m2 = attention_weights(high_dark, low_any);
        CHECK(m2.w_high.at(0, 0, 0) == 0.008f);
    }

    SUBCASE("weights live in [w_min, 1]") {
        const AttentionMaps m = attention_weights(
            make_ldr(random_buffer(16, 16, 61), 1.0, ExposureTag::High),
            make_ldr(random_buffer(16, 16, 67), 0.25, ExposureTag::Low));
        for (float v : m.w_high.data) {
            CHECK(v >= 1e-4f);
            CHECK(v <= 1.0f);
        }
        for (float v : m.w_low.data) {
            CHECK(v >= 1e-4f);
            CHECK(v <= 1.0f);
        }
    }

    SUBCASE("tag mismatch is rejected") {
        CHECK_THROWS_AS(attention_weights(low, low), Error);
        CHECK_THROWS_AS(attention_weights(high, high), Error);
    }
}

TEST_CASE("static unsaturated scene merges to the common radiance") {
    const RadianceFrame gt = make_radiance(uniform_buffer(8, 8, 0.4f));
    const ExposedPair pair = expose_pair(gt, 1.0, 2);
    const RadianceFrame merged = merge_hdr(pair.high, pair.low);
    CHECK(max_abs_diff(merged.pixels, gt.pixels) <= 1e-5);
}

TEST_CASE("saturated high pixels recover the low estimate") {
    // Radiance chosen so the high exposure clips while the low stays in
    // its usable band; the merged value must track H_low to 0.1%.
    const int n = 64;
    PixelBuffer radiance(n, 1);
    for (int x = 0; x < n; ++x) {
        const double h = 1.05 + 5.0 * x / (n - 1); // dt_high = 1 clips at 1
        for (int c = 0; c < 3; ++c) radiance.at(x, 0, c) = static_cast<float>(h);
    }
    const ExposedPair pair = expose_pair(make_radiance(radiance), 1.0, 3);
    const RadianceFrame h_low = ldr_to_radiance(pair.low);
    const RadianceFrame merged = merge_hdr(pair.high, pair.low);

    for (int x = 0; x < n; ++x)
        for (int c = 0; c < 3; ++c) {
            const double v_high = pair.high.pixels.at(x, 0, c);
            const double v_low = pair.low.pixels.at(x, 0, c);
            if (v_high >= 0.995 && v_low >= 0.1 && v_low <= 0.9) {
                const double rel = std::fabs(merged.pixels.at(x, 0, c) - h_low.pixels.at(x, 0, c)) /
                                   h_low.pixels.at(x, 0, c);
                CHECK(rel <= 1e-3);
            }
        }

    // Expected value recomputed directly from the floored weighted mean.
    const double v_low0 = pair.low.pixels.at(0, 0, 0);
    const double h_high0 = std::pow(1.0, 2.2) / 1.0;
    const double h_low0 = std::pow(v_low0, 2.2) / 0.125;
    const double w_low0 = std::clamp(2.0 * std::min(v_low0, 1.0 - v_low0), 1e-4, 1.0);
    const double expected = (1e-4 * h_high0 + w_low0 * h_low0) / (1e-4 + w_low0);
    CHECK(merged.pixels.at(0, 0, 0) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("all-zero pair merges to zero") {
    const LdrFrame high = make_ldr(PixelBuffer(4, 4), 1.0, ExposureTag::High);
    const LdrFrame low = make_ldr(PixelBuffer(4, 4), 0.5, ExposureTag::Low);
    for (float v : merge_hdr(high, low).pixels.data) CHECK(v == 0.0f);
}

TEST_CASE("merged radiance lies between the two estimates") {
    const LdrFrame high = make_ldr(random_buffer(32, 32, 71), 1.0, ExposureTag::High);
    const LdrFrame low = make_ldr(random_buffer(32, 32, 73), 0.125, ExposureTag::Low);
    const RadianceFrame h_high = ldr_to_radiance(high);
    const RadianceFrame h_low = ldr_to_radiance(low);
    const RadianceFrame merged = merge_hdr(high, low);
    for (std::size_t i = 0; i < merged.pixels.data.size(); ++i) {
        const float lo = std::min(h_high.pixels.data[i], h_low.pixels.data[i]);
        const float hi = std::max(h_high.pixels.data[i], h_low.pixels.data[i]);
        CHECK(merged.pixels.data[i] >= lo);
        CHECK(merged.pixels.data[i] <= hi);
    }
}

TEST_CASE("quantized static scene merges within the quantization bound") {
    const RadianceFrame gt = make_radiance(random_buffer(16, 16, 83, 0.05, 0.85));
    const ExposedPair pair = expose_pair(gt, 1.0, 2, BitDepth::b16);
    const RadianceFrame merged = merge_hdr(pair.high, pair.low);
    // Worst branch: gamma * half-step / dt_low.
    const double bound = 2.2 * 0.5001 / 65535.0 / 0.25;
    CHECK(max_abs_diff(merged.pixels, gt.pixels) <= bound);
}

TEST_CASE("the weighted mean has no order bias") {
    const PixelBuffer a = random_buffer(8, 8, 91, 0.0, 4.0);
    const PixelBuffer b = random_buffer(8, 8, 93, 0.0, 4.0);
    const PixelBuffer wa = random_buffer(8, 8, 95, 1e-4, 1.0);
    const PixelBuffer wb = random_buffer(8, 8, 97, 1e-4, 1.0);
    PixelBuffer ab, ba;
    kernels::weighted_merge(a, b, wa, wb, ab);
    kernels::weighted_merge(b, a, wb, wa, ba);
    CHECK(buffers_equal(ab, ba));
}

TEST_CASE("degenerate pairs are rejected") {
    const LdrFrame high = make_ldr(uniform_buffer(4, 4, 0.5f), 1.0, ExposureTag::High);
    const LdrFrame low_same = make_ldr(uniform_buffer(4, 4, 0.5f), 1.0, ExposureTag::Low);
    const LdrFrame low_longer = make_ldr(uniform_buffer(4, 4, 0.5f), 2.0, ExposureTag::Low);
    CHECK_THROWS_AS(merge_hdr(high, low_same), Error);
    CHECK_THROWS_AS(merge_hdr(high, low_longer), Error);
    try {
        merge_hdr(high, low_same);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_pair);
    }
}

} // TEST_SUITE
