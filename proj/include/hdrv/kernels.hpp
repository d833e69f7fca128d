#pragma once

#include <cstddef>

#include "hdrv/image.hpp"

namespace hdrv {

struct FlowField {
    int width = 0;
    int height = 0;
    std::vector<float> uv; // interleaved (dx, dy) per pixel, pixels/frame

    FlowField() = default;
    FlowField(int w, int h)
        : width(w), height(h),
          uv(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 2, 0.0f) {}

    float& dx(int x, int y) { return uv[(static_cast<std::size_t>(y) * width + x) * 2]; }
    float& dy(int x, int y) { return uv[(static_cast<std::size_t>(y) * width + x) * 2 + 1]; }
    float dx(int x, int y) const { return uv[(static_cast<std::size_t>(y) * width + x) * 2]; }
    float dy(int x, int y) const { return uv[(static_cast<std::size_t>(y) * width + x) * 2 + 1]; }
};

namespace kernels {

// Dense per-pixel kernels. Every kernel here has an OpenMP row-parallel
// implementation and a plain serial twin under kernels::serial that must
// produce bit-identical output; the unit suite and the benchmark tool
// compare the two. Reductions accumulate per-row partials that are combined
// serially in row order, so results do not depend on the thread count.

// dst = src^gamma / exposure_time
void delinearize(const PixelBuffer& src, double gamma, double exposure_time, PixelBuffer& dst);

// dst = clip((src * exposure_time)^(1/gamma), 0, 1), then quantized to
// levels steps when levels > 0.
void expose(const PixelBuffer& src, double gamma, double exposure_time, long levels,
            PixelBuffer& dst);

// dst = log(1 + mu*src) / log(1 + mu)
void mu_law_map(const PixelBuffer& src, double mu, PixelBuffer& dst);

// dst = clamp(src / reference_max, 0, 1)
void normalize_clamp(const PixelBuffer& src, double reference_max, PixelBuffer& dst);

// Rec. 709 luminance.
void luminance(const PixelBuffer& src, Plane& dst);

// exp(mean(log(L + epsilon)))
double log_mean_luminance(const Plane& lum, double epsilon);

// Global photographic operator: l = scale*L, Ld = l/(1+l), colors scaled by
// Ld/L, gamma-encoded, quantized to 8 bits.
void reinhard_map(const PixelBuffer& src, const Plane& lum, double scale, double gamma,
                  PixelBuffer& dst);

// dst = a + t*(b - a) per sample (exact when a == b).
void lerp_buffers(const PixelBuffer& a, const PixelBuffer& b, double t, PixelBuffer& dst);

// dst(p) = src(p + scale*flow(p)), bilinear, clamp-to-edge.
void warp_bilinear(const PixelBuffer& src, const FlowField& flow, double scale,
                   PixelBuffer& dst);
void warp_plane_bilinear(const Plane& src, const FlowField& flow, double scale, Plane& dst);

// vis(p) = exp(-|fwd(p) + bwd(p + fwd(p))| / sigma)
void flow_consistency_visibility(const FlowField& fwd, const FlowField& bwd, double sigma,
                                 Plane& vis);

// dst = [(1-tau)*va*a + tau*vb*b] / [(1-tau)*va + tau*vb], with the 0.5/0.5
// average where the denominator vanishes. Evaluated in lerp form so a == b
// passes through exactly.
void visibility_blend(const PixelBuffer& a, const PixelBuffer& b, const Plane& va,
                      const Plane& vb, double tau, double denom_epsilon, PixelBuffer& dst);

// Well-exposedness hat weights. w = clamp(2*min(v, 1-v), w_min, 1) with the
// saturation override above sat_threshold; the low map additionally floors
// values at or below dark_threshold.
void attention_maps(const PixelBuffer& high, const PixelBuffer& low, double w_min,
                    double sat_threshold, double dark_threshold, PixelBuffer& w_high,
                    PixelBuffer& w_low);

// dst = (wh*h + wl*l) / (wh + wl) per sample.
void weighted_merge(const PixelBuffer& h, const PixelBuffer& l, const PixelBuffer& wh,
                    const PixelBuffer& wl, PixelBuffer& dst);

// Binomial [1 4 6 4 1] low-pass, decimate by 2 (clamped borders).
void downsample2(const Plane& src, Plane& dst);

// Bilinear flow resize to (out_w, out_h) with vectors rescaled by the size
// ratio per axis.
void upsample_flow(const FlowField& src, int out_w, int out_h, FlowField& dst);

// One pyramid level of iterative local least-squares refinement. Each
// iteration warps b by the current flow, forms windowed normal equations
// (radius-sized box) regularized by lambda, and applies per-pixel updates
// clamped to max_step.
void flow_refine_level(const Plane& a, const Plane& b, int radius, int iterations,
                       double lambda, double max_step, FlowField& flow);

struct ErrorSums {
    double abs_sum = 0.0;
    double sq_sum = 0.0;
    std::size_t count = 0;
};

// Sums of |a-b| and (a-b)^2 over all samples.
ErrorSums error_sums(const PixelBuffer& a, const PixelBuffer& b);

namespace serial {

void delinearize(const PixelBuffer& src, double gamma, double exposure_time, PixelBuffer& dst);
void expose(const PixelBuffer& src, double gamma, double exposure_time, long levels,
            PixelBuffer& dst);
void mu_law_map(const PixelBuffer& src, double mu, PixelBuffer& dst);
void normalize_clamp(const PixelBuffer& src, double reference_max, PixelBuffer& dst);
void luminance(const PixelBuffer& src, Plane& dst);
double log_mean_luminance(const Plane& lum, double epsilon);
void reinhard_map(const PixelBuffer& src, const Plane& lum, double scale, double gamma,
                  PixelBuffer& dst);
void lerp_buffers(const PixelBuffer& a, const PixelBuffer& b, double t, PixelBuffer& dst);
void warp_bilinear(const PixelBuffer& src, const FlowField& flow, double scale,
                   PixelBuffer& dst);
void warp_plane_bilinear(const Plane& src, const FlowField& flow, double scale, Plane& dst);
void flow_consistency_visibility(const FlowField& fwd, const FlowField& bwd, double sigma,
                                 Plane& vis);
void visibility_blend(const PixelBuffer& a, const PixelBuffer& b, const Plane& va,
                      const Plane& vb, double tau, double denom_epsilon, PixelBuffer& dst);
void attention_maps(const PixelBuffer& high, const PixelBuffer& low, double w_min,
                    double sat_threshold, double dark_threshold, PixelBuffer& w_high,
                    PixelBuffer& w_low);
void weighted_merge(const PixelBuffer& h, const PixelBuffer& l, const PixelBuffer& wh,
                    const PixelBuffer& wl, PixelBuffer& dst);
void downsample2(const Plane& src, Plane& dst);
void upsample_flow(const FlowField& src, int out_w, int out_h, FlowField& dst);
void flow_refine_level(const Plane& a, const Plane& b, int radius, int iterations,
                       double lambda, double max_step, FlowField& flow);
ErrorSums error_sums(const PixelBuffer& a, const PixelBuffer& b);

} // namespace serial

} // namespace kernels
} // namespace hdrv
