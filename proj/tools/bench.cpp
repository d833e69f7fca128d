// Kernel benchmark: times each OpenMP kernel against its serial reference
// and verifies the outputs are identical.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "hdrv/kernels.hpp"
#include "hdrv/rng.hpp"
#include "hdrv/runtime.hpp"

using namespace hdrv;
namespace k = hdrv::kernels;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    fn(); // warm-up
    const Clock::time_point start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count() / reps;
}

PixelBuffer random_buffer(int w, int h, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    PixelBuffer buf(w, h);
    for (std::size_t i = 0; i < buf.data.size(); ++i)
        buf.data[i] = static_cast<float>(lo + (hi - lo) * counter_uniform(seed, i));
    return buf;
}

Plane random_plane(int w, int h, std::uint64_t seed) {
    Plane p(w, h);
    for (std::size_t i = 0; i < p.data.size(); ++i)
        p.data[i] = static_cast<float>(counter_uniform(seed, i));
    return p;
}

FlowField random_flow(int w, int h, std::uint64_t seed, double amp) {
    FlowField f(w, h);
    for (std::size_t i = 0; i < f.uv.size(); ++i)
        f.uv[i] = static_cast<float>((counter_uniform(seed, i) - 0.5) * 2.0 * amp);
    return f;
}

bool equal(const PixelBuffer& a, const PixelBuffer& b) { return a.data == b.data; }

struct Row {
    std::string name;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

} // namespace

int main(int argc, char** argv) {
    int width = 1280, height = 720, reps = 5;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--width") && i + 1 < argc) width = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--height") && i + 1 < argc) height = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) reps = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: hdrv_bench [--width N] [--height N] [--reps N]\n");
            return 2;
        }
    }

    const PixelBuffer rgb = random_buffer(width, height, 1);
    const PixelBuffer rgb2 = random_buffer(width, height, 2);
    const PixelBuffer radiance = random_buffer(width, height, 3, 0.0, 8.0);
    const Plane plane = random_plane(width, height, 4);
    const Plane plane2 = random_plane(width, height, 5);
    const FlowField flow = random_flow(width, height, 6, 4.0);
    const FlowField flow2 = random_flow(width, height, 7, 4.0);

    std::vector<Row> rows;
    PixelBuffer out_p, out_s, aux_p, aux_s;
    Plane pout_p, pout_s;
    FlowField fout_p, fout_s;

    auto add = [&](const std::string& name, const std::function<void()>& par,
                   const std::function<void()>& ser, bool same) {
        Row row;
        row.name = name;
        row.parallel_ms = time_ms(par, reps);
        row.serial_ms = time_ms(ser, reps);
        row.identical = same;
        rows.push_back(row);
    };

    k::delinearize(rgb, 2.2, 0.25, out_p);
    k::serial::delinearize(rgb, 2.2, 0.25, out_s);
    add("delinearize", [&] { k::delinearize(rgb, 2.2, 0.25, out_p); },
        [&] { k::serial::delinearize(rgb, 2.2, 0.25, out_s); }, equal(out_p, out_s));

    k::expose(radiance, 2.2, 0.5, 65535, out_p);
    k::serial::expose(radiance, 2.2, 0.5, 65535, out_s);
    add("expose", [&] { k::expose(radiance, 2.2, 0.5, 65535, out_p); },
        [&] { k::serial::expose(radiance, 2.2, 0.5, 65535, out_s); }, equal(out_p, out_s));

    k::mu_law_map(rgb, 5000.0, out_p);
    k::serial::mu_law_map(rgb, 5000.0, out_s);
    add("mu_law_map", [&] { k::mu_law_map(rgb, 5000.0, out_p); },
        [&] { k::serial::mu_law_map(rgb, 5000.0, out_s); }, equal(out_p, out_s));

    Plane lum_p, lum_s;
    k::luminance(radiance, lum_p);
    k::serial::luminance(radiance, lum_s);
    add("luminance", [&] { k::luminance(radiance, lum_p); },
        [&] { k::serial::luminance(radiance, lum_s); }, lum_p.data == lum_s.data);

    double lm_p = k::log_mean_luminance(lum_p, 1e-6);
    double lm_s = k::serial::log_mean_luminance(lum_s, 1e-6);
    add("log_mean_luminance", [&] { k::log_mean_luminance(lum_p, 1e-6); },
        [&] { k::serial::log_mean_luminance(lum_s, 1e-6); }, lm_p == lm_s);

    k::reinhard_map(radiance, lum_p, 0.3, 2.2, out_p);
    k::serial::reinhard_map(radiance, lum_s, 0.3, 2.2, out_s);
    add("reinhard_map", [&] { k::reinhard_map(radiance, lum_p, 0.3, 2.2, out_p); },
        [&] { k::serial::reinhard_map(radiance, lum_s, 0.3, 2.2, out_s); }, equal(out_p, out_s));

    k::warp_bilinear(rgb, flow, -0.5, out_p);
    k::serial::warp_bilinear(rgb, flow, -0.5, out_s);
    add("warp_bilinear", [&] { k::warp_bilinear(rgb, flow, -0.5, out_p); },
        [&] { k::serial::warp_bilinear(rgb, flow, -0.5, out_s); }, equal(out_p, out_s));

    k::flow_consistency_visibility(flow, flow2, 2.0, pout_p);
    k::serial::flow_consistency_visibility(flow, flow2, 2.0, pout_s);
    add("flow_visibility", [&] { k::flow_consistency_visibility(flow, flow2, 2.0, pout_p); },
        [&] { k::serial::flow_consistency_visibility(flow, flow2, 2.0, pout_s); },
        pout_p.data == pout_s.data);

    k::visibility_blend(rgb, rgb2, plane, plane2, 0.5, 1e-6, out_p);
    k::serial::visibility_blend(rgb, rgb2, plane, plane2, 0.5, 1e-6, out_s);
    add("visibility_blend", [&] { k::visibility_blend(rgb, rgb2, plane, plane2, 0.5, 1e-6, out_p); },
        [&] { k::serial::visibility_blend(rgb, rgb2, plane, plane2, 0.5, 1e-6, out_s); },
        equal(out_p, out_s));

    k::attention_maps(rgb, rgb2, 1e-4, 0.995, 0.005, out_p, aux_p);
    k::serial::attention_maps(rgb, rgb2, 1e-4, 0.995, 0.005, out_s, aux_s);
    add("attention_maps", [&] { k::attention_maps(rgb, rgb2, 1e-4, 0.995, 0.005, out_p, aux_p); },
        [&] { k::serial::attention_maps(rgb, rgb2, 1e-4, 0.995, 0.005, out_s, aux_s); },
        equal(out_p, out_s) && equal(aux_p, aux_s));

    k::weighted_merge(rgb, rgb2, out_p, aux_p, out_p);
    PixelBuffer wm_p, wm_s;
    k::attention_maps(rgb, rgb2, 1e-4, 0.995, 0.005, out_p, aux_p);
    k::weighted_merge(rgb, rgb2, out_p, aux_p, wm_p);
    k::serial::weighted_merge(rgb, rgb2, out_p, aux_p, wm_s);
    add("weighted_merge", [&] { k::weighted_merge(rgb, rgb2, out_p, aux_p, wm_p); },
        [&] { k::serial::weighted_merge(rgb, rgb2, out_p, aux_p, wm_s); }, equal(wm_p, wm_s));

    k::downsample2(plane, pout_p);
    k::serial::downsample2(plane, pout_s);
    add("downsample2", [&] { k::downsample2(plane, pout_p); },
        [&] { k::serial::downsample2(plane, pout_s); }, pout_p.data == pout_s.data);

    k::upsample_flow(flow, width * 2, height * 2, fout_p);
    k::serial::upsample_flow(flow, width * 2, height * 2, fout_s);
    add("upsample_flow", [&] { k::upsample_flow(flow, width * 2, height * 2, fout_p); },
        [&] { k::serial::upsample_flow(flow, width * 2, height * 2, fout_s); },
        fout_p.uv == fout_s.uv);

    FlowField refine_p(width, height), refine_s(width, height);
    const auto run_refine_p = [&] {
        refine_p = FlowField(width, height);
        k::flow_refine_level(plane, plane2, 3, 1, 1e-3, 3.0, refine_p);
    };
    const auto run_refine_s = [&] {
        refine_s = FlowField(width, height);
        k::serial::flow_refine_level(plane, plane2, 3, 1, 1e-3, 3.0, refine_s);
    };
    run_refine_p();
    run_refine_s();
    add("flow_refine_level", run_refine_p, run_refine_s, refine_p.uv == refine_s.uv);

    const k::ErrorSums es_p = k::error_sums(rgb, rgb2);
    const k::ErrorSums es_s = k::serial::error_sums(rgb, rgb2);
    add("error_sums", [&] { k::error_sums(rgb, rgb2); },
        [&] { k::serial::error_sums(rgb, rgb2); },
        es_p.abs_sum == es_s.abs_sum && es_p.sq_sum == es_s.sq_sum);

    std::printf("kernel benchmark: %dx%d, %d reps, %d threads\n", width, height, reps,
                effective_threads());
    std::printf("%-20s %12s %12s %9s %10s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup",
                "identical");
    bool all_identical = true;
    for (const Row& row : rows) {
        std::printf("%-20s %12.3f %12.3f %8.2fx %10s\n", row.name.c_str(), row.serial_ms,
                    row.parallel_ms, row.serial_ms / row.parallel_ms,
                    row.identical ? "yes" : "NO");
        all_identical = all_identical && row.identical;
    }
    if (!all_identical) {
        std::fprintf(stderr, "mismatch between serial and OpenMP kernels\n");
        return 1;
    }
    return 0;
}
