#include "hdrv/flow.hpp"

#include <cmath>
#include <vector>

namespace hdrv {

namespace {

void require_matched_pair(const LdrFrame& a, const LdrFrame& b) {
    require_same_shape(a.pixels, b.pixels, "flow");
    if (a.tag != b.tag)
        raise(ErrorCode::exposure_mismatch, "flow: frames have different exposure tags");
    if (a.exposure_time != b.exposure_time)
        raise(ErrorCode::exposure_mismatch, "flow: frames have different exposure times");
}

int pyramid_steps(int w, int h, int min_size) {
    const int m = std::min(w, h);
    int steps = 0;
    int s = m;
    while (s / 2 >= min_size) {
        s = (s + 1) / 2;
        ++steps;
    }
    return steps;
}

} // namespace

FlowField estimate_flow(const LdrFrame& a, const LdrFrame& b, const FlowParams& params) {
    require_matched_pair(a, b);
    const int w = a.pixels.width;
    const int h = a.pixels.height;
    if (std::min(w, h) < params.min_level_size)
        raise(ErrorCode::too_small, "flow: frames smaller than 16x16");

    Plane la, lb;
    kernels::luminance(a.pixels, la);
    kernels::luminance(b.pixels, lb);

    const int steps = pyramid_steps(w, h, params.min_level_size);
    std::vector<Plane> pyr_a(static_cast<std::size_t>(steps) + 1);
    std::vector<Plane> pyr_b(static_cast<std::size_t>(steps) + 1);
    pyr_a[0] = std::move(la);
    pyr_b[0] = std::move(lb);
    for (int l = 1; l <= steps; ++l) {
        kernels::downsample2(pyr_a[l - 1], pyr_a[l]);
        kernels::downsample2(pyr_b[l - 1], pyr_b[l]);
    }

    FlowField flow(pyr_a[steps].width, pyr_a[steps].height);
    for (int l = steps; l >= 0; --l) {
        if (l < steps) {
            FlowField up;
            kernels::upsample_flow(flow, pyr_a[l].width, pyr_a[l].height, up);
            flow = std::move(up);
        }
        kernels::flow_refine_level(pyr_a[l], pyr_b[l], params.window_radius,
                                   params.iterations_per_level, params.regularization,
                                   static_cast<double>(params.window_radius), flow);
    }
    return flow;
}

LdrFrame warp_backward(const LdrFrame& frame, const FlowField& flow, double scale) {
    if (frame.pixels.width != flow.width || frame.pixels.height != flow.height)
        raise(ErrorCode::shape_mismatch, "warp: flow and frame dimensions differ");
    LdrFrame out;
    out.exposure_time = frame.exposure_time;
    out.tag = frame.tag;
    out.bit_depth = BitDepth::unquantized;
    kernels::warp_bilinear(frame.pixels, flow, scale, out.pixels);
    return out;
}

} // namespace hdrv
