#include "hdrv/interpolate.hpp"

#include <cmath>

namespace hdrv {

namespace {

constexpr double kBlendDenomEpsilon = 1e-6;

void require_interp_pair(const LdrFrame& a, const LdrFrame& b) {
    require_same_shape(a.pixels, b.pixels, "interpolate");
    if (a.tag != b.tag)
        raise(ErrorCode::exposure_mismatch, "interpolate: frames have different exposure tags");
    if (a.exposure_time != b.exposure_time)
        raise(ErrorCode::exposure_mismatch, "interpolate: frames have different exposure times");
}

LdrFrame make_output(const LdrFrame& a, PixelBuffer&& pixels) {
    LdrFrame out;
    out.pixels = std::move(pixels);
    out.exposure_time = a.exposure_time;
    out.tag = a.tag;
    out.bit_depth = BitDepth::unquantized;
    return out;
}

// Unaligned per-pixel cross-fade. Fails under large motion; kept as the
// baseline the flow backend is measured against.
class BlendBackend final : public InterpolationBackend {
public:
    std::string_view name() const override { return "blend"; }

    LdrFrame run(const LdrFrame& a, const LdrFrame& b, double tau) const override {
        PixelBuffer out;
        kernels::lerp_buffers(a.pixels, b.pixels, tau, out);
        return make_output(a, std::move(out));
    }
};

// Bidirectional flow, linear intermediate-flow scaling, consistency
// visibility, normalized blend.
class FlowBackend final : public InterpolationBackend {
public:
    std::string_view name() const override { return "flow"; }

    LdrFrame run(const LdrFrame& a, const LdrFrame& b, double tau) const override {
        const FlowField fab = estimate_flow(a, b);
        const FlowField fba = estimate_flow(b, a);

        // Linear-motion model: a pixel at fractional time tau sits tau*F
        // behind its location in A and (1-tau)*F ahead of its location in
        // B, so both warps run against their flow's direction.
        const LdrFrame warp_a = warp_backward(a, fab, -tau);
        const LdrFrame warp_b = warp_backward(b, fba, -(1.0 - tau));

        const VisibilityMap vis_a = visibility_from_flow(fab, fba);
        const VisibilityMap vis_b = visibility_from_flow(fba, fab);

        return blend_with_visibility(warp_a, warp_b, vis_a, vis_b, tau);
    }
};

const BlendBackend g_blend{};
const FlowBackend g_flow{};
const InterpolationBackend* const g_backends[] = {&g_blend, &g_flow};

} // namespace

const InterpolationBackend& get_backend(std::string_view name) {
    for (const InterpolationBackend* backend : g_backends)
        if (backend->name() == name) return *backend;
    raise(ErrorCode::invalid_parameter, "unknown interpolation backend: " + std::string(name));
}

std::vector<std::string_view> backend_names() {
    std::vector<std::string_view> names;
    for (const InterpolationBackend* backend : g_backends) names.push_back(backend->name());
    return names;
}

LdrFrame interpolate(const LdrFrame& a, const LdrFrame& b, double tau,
                     const InterpolationBackend& backend) {
    require_interp_pair(a, b);
    if (!(tau > 0.0 && tau < 1.0))
        raise(ErrorCode::invalid_parameter, "interpolate: tau must lie in (0,1)");
    return backend.run(a, b, tau);
}

LdrFrame blend_with_visibility(const LdrFrame& warp_a, const LdrFrame& warp_b,
                               const VisibilityMap& vis_a, const VisibilityMap& vis_b,
                               double tau) {
    require_same_shape(warp_a.pixels, warp_b.pixels, "blend_with_visibility");
    if (vis_a.weights.width != warp_a.pixels.width ||
        vis_a.weights.height != warp_a.pixels.height ||
        vis_b.weights.width != warp_a.pixels.width ||
        vis_b.weights.height != warp_a.pixels.height)
        raise(ErrorCode::shape_mismatch, "blend_with_visibility: visibility dimensions differ");

    PixelBuffer out;
    kernels::visibility_blend(warp_a.pixels, warp_b.pixels, vis_a.weights, vis_b.weights, tau,
                              kBlendDenomEpsilon, out);
    return make_output(warp_a, std::move(out));
}

VisibilityMap visibility_from_flow(const FlowField& forward, const FlowField& backward,
                                   double sigma) {
    if (forward.width != backward.width || forward.height != backward.height)
        raise(ErrorCode::shape_mismatch, "visibility: flow dimensions differ");
    VisibilityMap vis;
    kernels::flow_consistency_visibility(forward, backward, sigma, vis.weights);
    return vis;
}

} // namespace hdrv
