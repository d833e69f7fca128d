#include <doctest.h>

#include <cmath>

#include "hdrv/interpolate.hpp"
#include "hdrv/metrics.hpp"
#include "hdrv/radiometry.hpp"
#include "hdrv/scene.hpp"
#include "test_util.hpp"

using namespace hdrv;
using namespace hdrv::testutil;

namespace {

LdrFrame expose_scene(const SceneSpec& spec, double t, double dt = 1.0) {
    return radiance_to_ldr(procedural_scene(spec, t), dt, {}, BitDepth::unquantized,
                           ExposureTag::High);
}

} // namespace

TEST_SUITE("interp") {

TEST_CASE("backend registry resolves by name") {
    CHECK(get_backend("blend").name() == "blend");
    CHECK(get_backend("flow").name() == "flow");
    CHECK(backend_names().size() == 2);
    CHECK_THROWS_AS(get_backend("learned"), Error);
}

TEST_CASE("interpolating a frame with itself is exact for both backends") {
    const LdrFrame a = make_ldr(random_buffer(40, 24, 19), 0.5, ExposureTag::Low);
    for (const char* name : {"blend", "flow"})
        for (double tau : {0.1, 0.5, 0.875}) {
            const LdrFrame out = interpolate(a, a, tau, get_backend(name));
            CHECK(buffers_equal(out.pixels, a.pixels));
            CHECK(out.exposure_time == a.exposure_time);
            CHECK(out.tag == a.tag);
        }
}

TEST_CASE("static textured scene interpolates to itself") {
    const SceneSpec spec = static_test_scene(64, 64, 3);
    const LdrFrame f0 = expose_scene(spec, 0.0);
    const LdrFrame f1 = expose_scene(spec, 1.0);
    const LdrFrame mid = interpolate(f0, f1, 0.5, get_backend("flow"));
    CHECK(max_abs_diff(mid.pixels, f0.pixels) <= 1e-6);
}

TEST_CASE("flow backend beats blend on a translating blob") {
    const SceneSpec spec = moving_blob_scene(96, 96, 2, 6.0, 0.0);
    const LdrFrame f0 = expose_scene(spec, 0.0);
    const LdrFrame f1 = expose_scene(spec, 1.0);
    const LdrFrame truth = expose_scene(spec, 0.5);

    const LdrFrame flow_mid = interpolate(f0, f1, 0.5, get_backend("flow"));
    const LdrFrame blend_mid = interpolate(f0, f1, 0.5, get_backend("blend"));
    const double psnr_flow = psnr(flow_mid.pixels, truth.pixels);
    const double psnr_blend = psnr(blend_mid.pixels, truth.pixels);
    CHECK(psnr_flow > psnr_blend + 5.0);
}

TEST_CASE("outputs stay in [0,1] and keep exposure metadata") {
    const LdrFrame a = make_ldr(random_buffer(48, 32, 51), 0.25, ExposureTag::Low);
    const LdrFrame b = make_ldr(random_buffer(48, 32, 53), 0.25, ExposureTag::Low);
    for (const char* name : {"blend", "flow"}) {
        const LdrFrame out = interpolate(a, b, 0.3, get_backend(name));
        CHECK(out.tag == ExposureTag::Low);
        CHECK(out.exposure_time == 0.25);
        for (float v : out.pixels.data) {
            CHECK(v >= 0.0f);
            CHECK(v <= 1.0f);
        }
    }
}

TEST_CASE("midpoint interpolation is nearly symmetric") {
    const SceneSpec spec = drifting_scene(128, 128, 2);
    const LdrFrame f0 = expose_scene(spec, 0.0);
    const LdrFrame f1 = expose_scene(spec, 1.0);
    const LdrFrame ab = interpolate(f0, f1, 0.5, get_backend("flow"));
    const LdrFrame ba = interpolate(f1, f0, 0.5, get_backend("flow"));
    const kernels::ErrorSums sums = kernels::error_sums(ab.pixels, ba.pixels);
    CHECK(sums.abs_sum / static_cast<double>(sums.count) <= 1e-3);
}

TEST_CASE("preconditions are enforced") {
    const LdrFrame a = make_ldr(uniform_buffer(32, 32, 0.5f), 1.0, ExposureTag::High);
    const LdrFrame wrong_tag = make_ldr(uniform_buffer(32, 32, 0.5f), 1.0, ExposureTag::Low);
    const LdrFrame wrong_dt = make_ldr(uniform_buffer(32, 32, 0.5f), 0.5, ExposureTag::High);
    const LdrFrame wrong_shape = make_ldr(uniform_buffer(32, 31, 0.5f), 1.0, ExposureTag::High);

    const InterpolationBackend& blend = get_backend("blend");
    CHECK_THROWS_AS(interpolate(a, wrong_tag, 0.5, blend), Error);
    CHECK_THROWS_AS(interpolate(a, wrong_dt, 0.5, blend), Error);
    CHECK_THROWS_AS(interpolate(a, wrong_shape, 0.5, blend), Error);
    CHECK_THROWS_AS(interpolate(a, a, 0.0, blend), Error);
    CHECK_THROWS_AS(interpolate(a, a, 1.0, blend), Error);

    try {
        interpolate(a, wrong_tag, 0.5, blend);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::exposure_mismatch);
    }
}

TEST_CASE("visibility blend handles occlusion and the tau weighting") {
    const int w = 8, h = 8;
    const LdrFrame wa = make_ldr(uniform_buffer(w, h, 0.0f));
    const LdrFrame wb = make_ldr(uniform_buffer(w, h, 1.0f));
    VisibilityMap full{Plane(w, h, 1.0f)};
    VisibilityMap none{Plane(w, h, 0.0f)};

    SUBCASE("equal visibility at tau 0.5 averages") {
        const LdrFrame out = blend_with_visibility(wa, wb, full, full, 0.5);
        for (float v : out.pixels.data) CHECK(v == 0.5f);
    }
    SUBCASE("invisible second frame passes the first through") {
        const LdrFrame out = blend_with_visibility(wa, wb, full, none, 0.5);
        for (float v : out.pixels.data) CHECK(v == 0.0f);
    }
    SUBCASE("tau 0.25 with full visibility evaluates to tau") {
        const LdrFrame out = blend_with_visibility(wa, wb, full, full, 0.25);
        for (float v : out.pixels.data) CHECK(v == 0.25f);
    }
    SUBCASE("vanishing denominator falls back to the plain average") {
        const LdrFrame out = blend_with_visibility(wa, wb, none, none, 0.25);
        for (float v : out.pixels.data) CHECK(v == 0.5f);
    }
}

TEST_CASE("consistent flow fields give full visibility") {
    FlowField fwd(16, 16), bwd(16, 16);
    const VisibilityMap vis = visibility_from_flow(fwd, bwd);
    for (float v : vis.weights.data) CHECK(v == 1.0f);

    // A contradictory backward field lowers confidence.
    for (std::size_t i = 0; i < bwd.uv.size(); i += 2) bwd.uv[i] = 3.0f;
    const VisibilityMap low = visibility_from_flow(fwd, bwd);
    for (float v : low.weights.data) {
        CHECK(v < 1.0f);
        CHECK(v >= 0.0f);
    }
}

} // TEST_SUITE
