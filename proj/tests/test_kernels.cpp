#include <doctest.h>

#include "hdrv/kernels.hpp"
#include "hdrv/runtime.hpp"
#include "test_util.hpp"

using namespace hdrv;
using namespace hdrv::testutil;
namespace k = hdrv::kernels;

// Every OpenMP kernel must reproduce its serial reference bit for bit,
// independent of the configured thread count.

namespace {

struct ThreadGuard {
    ~ThreadGuard() { set_max_threads(0); }
};

FlowField random_flow(int w, int h, std::uint64_t seed, double amp) {
    FlowField f(w, h);
    for (std::size_t i = 0; i < f.uv.size(); ++i)
        f.uv[i] = static_cast<float>((counter_uniform(seed, i) - 0.5) * 2.0 * amp);
    return f;
}

Plane random_plane(int w, int h, std::uint64_t seed) {
    Plane p(w, h);
    for (std::size_t i = 0; i < p.data.size(); ++i)
        p.data[i] = static_cast<float>(counter_uniform(seed, i));
    return p;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("pointwise kernels match their serial twins exactly") {
    ThreadGuard guard;
    const int w = 61, h = 43; // deliberately not multiples of the thread count
    const PixelBuffer src = random_buffer(w, h, 101);

    for (int threads : {0, 1, 3}) {
        set_max_threads(threads);
        PixelBuffer par, ser;

        k::delinearize(src, 2.2, 0.3, par);
        k::serial::delinearize(src, 2.2, 0.3, ser);
        CHECK(buffers_equal(par, ser));

        const PixelBuffer radiance = par;
        k::expose(radiance, 2.2, 0.3, 65535, par);
        k::serial::expose(radiance, 2.2, 0.3, 65535, ser);
        CHECK(buffers_equal(par, ser));

        k::mu_law_map(src, 5000.0, par);
        k::serial::mu_law_map(src, 5000.0, ser);
        CHECK(buffers_equal(par, ser));

        k::normalize_clamp(radiance, 0.7, par);
        k::serial::normalize_clamp(radiance, 0.7, ser);
        CHECK(buffers_equal(par, ser));

        const PixelBuffer b = random_buffer(w, h, 103);
        k::lerp_buffers(src, b, 0.37, par);
        k::serial::lerp_buffers(src, b, 0.37, ser);
        CHECK(buffers_equal(par, ser));
    }
}

TEST_CASE("reductions are independent of the thread count") {
    ThreadGuard guard;
    const PixelBuffer a = random_buffer(77, 55, 107);
    const PixelBuffer b = random_buffer(77, 55, 109);
    Plane lum;
    k::luminance(a, lum);

    set_max_threads(1);
    const double mean1 = k::log_mean_luminance(lum, 1e-6);
    const k::ErrorSums sums1 = k::error_sums(a, b);
    set_max_threads(5);
    const double mean5 = k::log_mean_luminance(lum, 1e-6);
    const k::ErrorSums sums5 = k::error_sums(a, b);

    CHECK(mean1 == mean5);
    CHECK(sums1.abs_sum == sums5.abs_sum);
    CHECK(sums1.sq_sum == sums5.sq_sum);

    const double mean_serial = k::serial::log_mean_luminance(lum, 1e-6);
    const k::ErrorSums sums_serial = k::serial::error_sums(a, b);
    CHECK(mean1 == mean_serial);
    CHECK(sums1.sq_sum == sums_serial.sq_sum);
}

TEST_CASE("tone mapping and merge kernels match serially") {
    ThreadGuard guard;
    set_max_threads(4);
    const int w = 47, h = 31;
    const PixelBuffer rgb = random_buffer(w, h, 113, 0.0, 8.0);
    Plane lum_p, lum_s;
    k::luminance(rgb, lum_p);
    k::serial::luminance(rgb, lum_s);
    CHECK(lum_p.data == lum_s.data);

    PixelBuffer par, ser;
    k::reinhard_map(rgb, lum_p, 0.35, 2.2, par);
    k::serial::reinhard_map(rgb, lum_s, 0.35, 2.2, ser);
    CHECK(buffers_equal(par, ser));

    const PixelBuffer high = random_buffer(w, h, 127);
    const PixelBuffer low = random_buffer(w, h, 131);
    PixelBuffer wh_p, wl_p, wh_s, wl_s;
    k::attention_maps(high, low, 1e-4, 0.995, 0.005, wh_p, wl_p);
    k::serial::attention_maps(high, low, 1e-4, 0.995, 0.005, wh_s, wl_s);
    CHECK(buffers_equal(wh_p, wh_s));
    CHECK(buffers_equal(wl_p, wl_s));

    k::weighted_merge(high, low, wh_p, wl_p, par);
    k::serial::weighted_merge(high, low, wh_s, wl_s, ser);
    CHECK(buffers_equal(par, ser));
}

TEST_CASE("warp, visibility and resampling kernels match serially") {
    ThreadGuard guard;
    set_max_threads(4);
    const int w = 53, h = 37;
    const PixelBuffer src = random_buffer(w, h, 137);
    const FlowField flow = random_flow(w, h, 139, 5.0);
    const FlowField back = random_flow(w, h, 149, 5.0);

    PixelBuffer par, ser;
    k::warp_bilinear(src, flow, -0.5, par);
    k::serial::warp_bilinear(src, flow, -0.5, ser);
    CHECK(buffers_equal(par, ser));

    const Plane plane = random_plane(w, h, 151);
    Plane pp, ps;
    k::warp_plane_bilinear(plane, flow, 1.0, pp);
    k::serial::warp_plane_bilinear(plane, flow, 1.0, ps);
    CHECK(pp.data == ps.data);

    k::flow_consistency_visibility(flow, back, 2.0, pp);
    k::serial::flow_consistency_visibility(flow, back, 2.0, ps);
    CHECK(pp.data == ps.data);

    Plane va = random_plane(w, h, 157);
    Plane vb = random_plane(w, h, 163);
    const PixelBuffer b2 = random_buffer(w, h, 167);
    k::visibility_blend(src, b2, va, vb, 0.25, 1e-6, par);
    k::serial::visibility_blend(src, b2, va, vb, 0.25, 1e-6, ser);
    CHECK(buffers_equal(par, ser));

    k::downsample2(plane, pp);
    k::serial::downsample2(plane, ps);
    CHECK(pp.width == (w + 1) / 2);
    CHECK(pp.data == ps.data);

    FlowField fp, fs;
    k::upsample_flow(flow, w * 2, h * 2, fp);
    k::serial::upsample_flow(flow, w * 2, h * 2, fs);
    CHECK(fp.uv == fs.uv);
}

TEST_CASE("flow refinement matches serially") {
    ThreadGuard guard;
    set_max_threads(4);
    const Plane a = smooth_noise(64, 48, 173);
    const Plane b = smooth_noise(64, 48, 179);

    FlowField par(64, 48), ser(64, 48);
    k::flow_refine_level(a, b, 3, 3, 1e-3, 3.0, par);
    k::serial::flow_refine_level(a, b, 3, 3, 1e-3, 3.0, ser);
    CHECK(par.uv == ser.uv);
}

} // TEST_SUITE
