// Serial reference implementations. Same per-row math as the OpenMP
// kernels, plain loops; the unit suite asserts bit-identical results.

#include <utility>
#include <vector>

#include "hdrv/kernels.hpp"
#include "kernel_math.hpp"

namespace hdrv::kernels::serial {

using namespace detail;

void delinearize(const PixelBuffer& src, double gamma, double exposure_time, PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    const int n = src.width * PixelBuffer::channels;
    for (int y = 0; y < src.height; ++y)
        row_delinearize(src.row(y), dst.row(y), n, gamma, exposure_time);
}

void expose(const PixelBuffer& src, double gamma, double exposure_time, long levels,
            PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    const int n = src.width * PixelBuffer::channels;
    const double inv_gamma = 1.0 / gamma;
    for (int y = 0; y < src.height; ++y)
        row_expose(src.row(y), dst.row(y), n, inv_gamma, exposure_time, levels);
}

void mu_law_map(const PixelBuffer& src, double mu, PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    const int n = src.width * PixelBuffer::channels;
    const double denom = std::log1p(mu);
    for (int y = 0; y < src.height; ++y)
        row_mu_law(src.row(y), dst.row(y), n, mu, denom);
}

void normalize_clamp(const PixelBuffer& src, double reference_max, PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    const int n = src.width * PixelBuffer::channels;
    for (int y = 0; y < src.height; ++y)
        row_normalize_clamp(src.row(y), dst.row(y), n, reference_max);
}

void luminance(const PixelBuffer& src, Plane& dst) {
    dst = Plane(src.width, src.height);
    for (int y = 0; y < src.height; ++y)
        row_luminance(src.row(y), dst.data.data() + static_cast<std::size_t>(y) * src.width,
                      src.width);
}

double log_mean_luminance(const Plane& lum, double epsilon) {
    double total = 0.0;
    for (int y = 0; y < lum.height; ++y)
        total += row_log_sum(lum.data.data() + static_cast<std::size_t>(y) * lum.width,
                             lum.width, epsilon);
    return std::exp(total / (static_cast<double>(lum.width) * lum.height));
}

void reinhard_map(const PixelBuffer& src, const Plane& lum, double scale, double gamma,
                  PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    const double inv_gamma = 1.0 / gamma;
    for (int y = 0; y < src.height; ++y)
        row_reinhard(src.row(y), lum.data.data() + static_cast<std::size_t>(y) * lum.width,
                     dst.row(y), src.width, scale, inv_gamma);
}

void lerp_buffers(const PixelBuffer& a, const PixelBuffer& b, double t, PixelBuffer& dst) {
    dst = PixelBuffer(a.width, a.height);
    const int n = a.width * PixelBuffer::channels;
    for (int y = 0; y < a.height; ++y)
        row_lerp(a.row(y), b.row(y), dst.row(y), n, t);
}

void warp_bilinear(const PixelBuffer& src, const FlowField& flow, double scale,
                   PixelBuffer& dst) {
    dst = PixelBuffer(src.width, src.height);
    for (int y = 0; y < src.height; ++y)
        row_warp_rgb(src, flow, scale, y, dst.row(y));
}

void warp_plane_bilinear(const Plane& src, const FlowField& flow, double scale, Plane& dst) {
    dst = Plane(src.width, src.height);
    for (int y = 0; y < src.height; ++y)
        row_warp_plane(src, flow, scale, y,
                       dst.data.data() + static_cast<std::size_t>(y) * src.width);
}

void flow_consistency_visibility(const FlowField& fwd, const FlowField& bwd, double sigma,
                                 Plane& vis) {
    vis = Plane(fwd.width, fwd.height);
    for (int y = 0; y < fwd.height; ++y)
        row_visibility(fwd, bwd, sigma, y,
                       vis.data.data() + static_cast<std::size_t>(y) * fwd.width);
}

void visibility_blend(const PixelBuffer& a, const PixelBuffer& b, const Plane& va,
                      const Plane& vb, double tau, double denom_epsilon, PixelBuffer& dst) {
    dst = PixelBuffer(a.width, a.height);
    for (int y = 0; y < a.height; ++y)
        row_visibility_blend(a.row(y), b.row(y),
                             va.data.data() + static_cast<std::size_t>(y) * a.width,
                             vb.data.data() + static_cast<std::size_t>(y) * a.width, dst.row(y),
                             a.width, tau, denom_epsilon);
}

void attention_maps(const PixelBuffer& high, const PixelBuffer& low, double w_min,
                    double sat_threshold, double dark_threshold, PixelBuffer& w_high,
                    PixelBuffer& w_low) {
    w_high = PixelBuffer(high.width, high.height);
    w_low = PixelBuffer(high.width, high.height);
    const int n = high.width * PixelBuffer::channels;
    for (int y = 0; y < high.height; ++y)
        row_attention(high.row(y), low.row(y), w_high.row(y), w_low.row(y), n, w_min,
                      sat_threshold, dark_threshold);
}

void weighted_merge(const PixelBuffer& h, const PixelBuffer& l, const PixelBuffer& wh,
                    const PixelBuffer& wl, PixelBuffer& dst) {
    dst = PixelBuffer(h.width, h.height);
    const int n = h.width * PixelBuffer::channels;
    for (int y = 0; y < h.height; ++y)
        row_weighted_merge(h.row(y), l.row(y), wh.row(y), wl.row(y), dst.row(y), n);
}

void downsample2(const Plane& src, Plane& dst) {
    const int out_w = (src.width + 1) / 2;
    const int out_h = (src.height + 1) / 2;
    dst = Plane(out_w, out_h);
    for (int y = 0; y < out_h; ++y)
        row_downsample2(src, y, dst.data.data() + static_cast<std::size_t>(y) * out_w, out_w);
}

void upsample_flow(const FlowField& src, int out_w, int out_h, FlowField& dst) {
    dst = FlowField(out_w, out_h);
    for (int y = 0; y < out_h; ++y)
        row_upsample_flow(src, out_w, out_h, y,
                          dst.uv.data() + static_cast<std::size_t>(y) * out_w * 2);
}

void flow_refine_level(const Plane& a, const Plane& b, int radius, int iterations,
                       double lambda, double max_step, FlowField& flow) {
    const int w = a.width;
    const int h = a.height;
    Plane bw(w, h), gx(w, h), gy(w, h), gt(w, h);
    FlowField next(w, h);
    for (int iter = 0; iter < iterations; ++iter) {
        for (int y = 0; y < h; ++y)
            row_warp_plane(b, flow, 1.0, y, bw.data.data() + static_cast<std::size_t>(y) * w);
        for (int y = 0; y < h; ++y)
            row_flow_gradients(a, bw, y, gx.data.data() + static_cast<std::size_t>(y) * w,
                               gy.data.data() + static_cast<std::size_t>(y) * w,
                               gt.data.data() + static_cast<std::size_t>(y) * w);
        for (int y = 0; y < h; ++y)
            row_flow_solve(gx, gy, gt, flow, y, radius, lambda, max_step,
                           next.uv.data() + static_cast<std::size_t>(y) * w * 2);
        std::swap(flow.uv, next.uv);
    }
}

ErrorSums error_sums(const PixelBuffer& a, const PixelBuffer& b) {
    const int n = a.width * PixelBuffer::channels;
    ErrorSums sums;
    for (int y = 0; y < a.height; ++y) {
        const RowErrorSums p = row_error_sums(a.row(y), b.row(y), n);
        sums.abs_sum += p.abs_sum;
        sums.sq_sum += p.sq_sum;
    }
    sums.count = a.sample_count();
    return sums;
}

} // namespace hdrv::kernels::serial
