#pragma once

// Per-row worker routines shared by the OpenMP kernels and their serial
// reference twins. Keeping the per-sample arithmetic in one place is what
// makes the two paths bit-identical: the drivers differ only in how rows
// are scheduled.

#include <algorithm>
#include <cmath>

#include "hdrv/kernels.hpp"

namespace hdrv::kernels::detail {

inline int clamp_index(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

inline double bilinear_plane(const Plane& p, double x, double y) {
    const int wmax = p.width - 1;
    const int hmax = p.height - 1;
    x = std::clamp(x, 0.0, static_cast<double>(wmax));
    y = std::clamp(y, 0.0, static_cast<double>(hmax));
    const int x0 = static_cast<int>(x);
    const int y0 = static_cast<int>(y);
    const int x1 = std::min(x0 + 1, wmax);
    const int y1 = std::min(y0 + 1, hmax);
    const double fx = x - x0;
    const double fy = y - y0;
    const double v00 = p.at(x0, y0);
    const double v01 = p.at(x1, y0);
    const double v10 = p.at(x0, y1);
    const double v11 = p.at(x1, y1);
    const double top = v00 + fx * (v01 - v00);
    const double bot = v10 + fx * (v11 - v10);
    return top + fy * (bot - top);
}

inline void bilinear_rgb(const PixelBuffer& p, double x, double y, double out[3]) {
    const int wmax = p.width - 1;
    const int hmax = p.height - 1;
    x = std::clamp(x, 0.0, static_cast<double>(wmax));
    y = std::clamp(y, 0.0, static_cast<double>(hmax));
    const int x0 = static_cast<int>(x);
    const int y0 = static_cast<int>(y);
    const int x1 = std::min(x0 + 1, wmax);
    const int y1 = std::min(y0 + 1, hmax);
    const double fx = x - x0;
    const double fy = y - y0;
    for (int c = 0; c < PixelBuffer::channels; ++c) {
        const double v00 = p.at(x0, y0, c);
        const double v01 = p.at(x1, y0, c);
        const double v10 = p.at(x0, y1, c);
        const double v11 = p.at(x1, y1, c);
        const double top = v00 + fx * (v01 - v00);
        const double bot = v10 + fx * (v11 - v10);
        out[c] = top + fy * (bot - top);
    }
}

inline void bilinear_flow(const FlowField& f, double x, double y, double out[2]) {
    const int wmax = f.width - 1;
    const int hmax = f.height - 1;
    x = std::clamp(x, 0.0, static_cast<double>(wmax));
    y = std::clamp(y, 0.0, static_cast<double>(hmax));
    const int x0 = static_cast<int>(x);
    const int y0 = static_cast<int>(y);
    const int x1 = std::min(x0 + 1, wmax);
    const int y1 = std::min(y0 + 1, hmax);
    const double fx = x - x0;
    const double fy = y - y0;
    for (int c = 0; c < 2; ++c) {
        const double v00 = f.uv[(static_cast<std::size_t>(y0) * f.width + x0) * 2 + c];
        const double v01 = f.uv[(static_cast<std::size_t>(y0) * f.width + x1) * 2 + c];
        const double v10 = f.uv[(static_cast<std::size_t>(y1) * f.width + x0) * 2 + c];
        const double v11 = f.uv[(static_cast<std::size_t>(y1) * f.width + x1) * 2 + c];
        const double top = v00 + fx * (v01 - v00);
        const double bot = v10 + fx * (v11 - v10);
        out[c] = top + fy * (bot - top);
    }
}

inline void row_delinearize(const float* src, float* dst, int n, double gamma, double dt) {
    for (int i = 0; i < n; ++i)
        dst[i] = static_cast<float>(std::pow(static_cast<double>(src[i]), gamma) / dt);
}

inline void row_expose(const float* src, float* dst, int n, double inv_gamma, double dt,
                       long levels) {
    for (int i = 0; i < n; ++i) {
        double v = std::pow(static_cast<double>(src[i]) * dt, inv_gamma);
        v = std::clamp(v, 0.0, 1.0);
        if (levels > 0)
            v = std::floor(v * static_cast<double>(levels) + 0.5) / static_cast<double>(levels);
        dst[i] = static_cast<float>(v);
    }
}

inline void row_mu_law(const float* src, float* dst, int n, double mu, double denom) {
    for (int i = 0; i < n; ++i)
        dst[i] = static_cast<float>(std::log1p(mu * static_cast<double>(src[i])) / denom);
}

inline void row_normalize_clamp(const float* src, float* dst, int n, double reference_max) {
    for (int i = 0; i < n; ++i)
        dst[i] = static_cast<float>(
            std::clamp(static_cast<double>(src[i]) / reference_max, 0.0, 1.0));
}

inline constexpr double kLumR = 0.212671;
inline constexpr double kLumG = 0.715160;
inline constexpr double kLumB = 0.072169;

inline void row_luminance(const float* src, float* dst, int n) {
    for (int i = 0; i < n; ++i) {
        const float* p = src + 3 * i;
        dst[i] = static_cast<float>(kLumR * p[0] + kLumG * p[1] + kLumB * p[2]);
    }
}

inline double row_log_sum(const float* lum, int n, double epsilon) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += std::log(static_cast<double>(lum[i]) + epsilon);
    return s;
}

inline void row_reinhard(const float* src, const float* lum, float* dst, int n, double scale,
                         double inv_gamma) {
    for (int i = 0; i < n; ++i) {
        const double L = lum[i];
        double ratio = 0.0;
        if (L > 0.0) {
            const double l = scale * L;
            ratio = (l / (1.0 + l)) / L;
        }
        for (int c = 0; c < 3; ++c) {
            double v = std::clamp(static_cast<double>(src[3 * i + c]) * ratio, 0.0, 1.0);
            v = std::pow(v, inv_gamma);
            v = std::floor(v * 255.0 + 0.5) / 255.0;
            dst[3 * i + c] = static_cast<float>(v);
        }
    }
}

inline void row_lerp(const float* a, const float* b, float* dst, int n, double t) {
    for (int i = 0; i < n; ++i) {
        const double av = a[i];
        dst[i] = static_cast<float>(av + t * (static_cast<double>(b[i]) - av));
    }
}

inline void row_warp_rgb(const PixelBuffer& src, const FlowField& flow, double scale, int y,
                         float* dst_row) {
    double rgb[3];
    for (int x = 0; x < src.width; ++x) {
        const double sx = x + scale * flow.dx(x, y);
        const double sy = y + scale * flow.dy(x, y);
        bilinear_rgb(src, sx, sy, rgb);
        dst_row[3 * x] = static_cast<float>(rgb[0]);
        dst_row[3 * x + 1] = static_cast<float>(rgb[1]);
        dst_row[3 * x + 2] = static_cast<float>(rgb[2]);
    }
}

inline void row_warp_plane(const Plane& src, const FlowField& flow, double scale, int y,
                           float* dst_row) {
    for (int x = 0; x < src.width; ++x) {
        const double sx = x + scale * flow.dx(x, y);
        const double sy = y + scale * flow.dy(x, y);
        dst_row[x] = static_cast<float>(bilinear_plane(src, sx, sy));
    }
}

inline void row_visibility(const FlowField& fwd, const FlowField& bwd, double sigma, int y,
                           float* dst_row) {
    double back[2];
    for (int x = 0; x < fwd.width; ++x) {
        const double fx = fwd.dx(x, y);
        const double fy = fwd.dy(x, y);
        bilinear_flow(bwd, x + fx, y + fy, back);
        const double rx = fx + back[0];
        const double ry = fy + back[1];
        dst_row[x] = static_cast<float>(std::exp(-std::sqrt(rx * rx + ry * ry) / sigma));
    }
}

inline void row_visibility_blend(const float* a, const float* b, const float* va,
                                 const float* vb, float* dst, int n, double tau,
                                 double denom_epsilon) {
    for (int i = 0; i < n; ++i) {
        const double wa = (1.0 - tau) * static_cast<double>(va[i]);
        const double wb = tau * static_cast<double>(vb[i]);
        const double den = wa + wb;
        const double w = den < denom_epsilon ? 0.5 : wb / den;
        for (int c = 0; c < 3; ++c) {
            const double av = a[3 * i + c];
            dst[3 * i + c] = static_cast<float>(av + w * (static_cast<double>(b[3 * i + c]) - av));
        }
    }
}

inline double hat_weight(double v, double w_min, double sat_threshold) {
    if (v >= sat_threshold) return w_min;
    return std::clamp(2.0 * std::min(v, 1.0 - v), w_min, 1.0);
}

inline void row_attention(const float* high, const float* low, float* wh, float* wl, int n,
                          double w_min, double sat_threshold, double dark_threshold) {
    for (int i = 0; i < n; ++i) {
        wh[i] = static_cast<float>(hat_weight(high[i], w_min, sat_threshold));
        const double vl = low[i];
        wl[i] = static_cast<float>(vl <= dark_threshold ? w_min
                                                        : hat_weight(vl, w_min, sat_threshold));
    }
}

inline void row_weighted_merge(const float* h, const float* l, const float* wh,
                               const float* wl, float* dst, int n) {
    for (int i = 0; i < n; ++i) {
        const double a = wh[i];
        const double b = wl[i];
        dst[i] = static_cast<float>(
            (a * static_cast<double>(h[i]) + b * static_cast<double>(l[i])) / (a + b));
    }
}

inline constexpr double kBinomial5[5] = {1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0,
                                         1.0 / 16.0};

inline void row_downsample2(const Plane& src, int y_out, float* dst_row, int out_w) {
    const int wmax = src.width - 1;
    const int hmax = src.height - 1;
    for (int x_out = 0; x_out < out_w; ++x_out) {
        double acc = 0.0;
        for (int j = 0; j < 5; ++j) {
            const int sy = clamp_index(2 * y_out + j - 2, hmax);
            double rowacc = 0.0;
            for (int i = 0; i < 5; ++i) {
                const int sx = clamp_index(2 * x_out + i - 2, wmax);
                rowacc += kBinomial5[i] * static_cast<double>(src.at(sx, sy));
            }
            acc += kBinomial5[j] * rowacc;
        }
        dst_row[x_out] = static_cast<float>(acc);
    }
}

inline void row_upsample_flow(const FlowField& src, int out_w, int out_h, int y, float* dst_row) {
    const double sx_ratio = static_cast<double>(src.width) / out_w;
    const double sy_ratio = static_cast<double>(src.height) / out_h;
    const double gain_x = static_cast<double>(out_w) / src.width;
    const double gain_y = static_cast<double>(out_h) / src.height;
    double uv[2];
    const double sy = (y + 0.5) * sy_ratio - 0.5;
    for (int x = 0; x < out_w; ++x) {
        const double sx = (x + 0.5) * sx_ratio - 0.5;
        bilinear_flow(src, sx, sy, uv);
        dst_row[2 * x] = static_cast<float>(uv[0] * gain_x);
        dst_row[2 * x + 1] = static_cast<float>(uv[1] * gain_y);
    }
}

inline void row_flow_gradients(const Plane& a, const Plane& bw, int y, float* gx, float* gy,
                               float* gt) {
    const int w = a.width;
    const int hmax = a.height - 1;
    const int ym = clamp_index(y - 1, hmax);
    const int yp = clamp_index(y + 1, hmax);
    for (int x = 0; x < w; ++x) {
        const int xm = clamp_index(x - 1, w - 1);
        const int xp = clamp_index(x + 1, w - 1);
        const double ax = static_cast<double>(a.at(xp, y)) - a.at(xm, y);
        const double bx = static_cast<double>(bw.at(xp, y)) - bw.at(xm, y);
        const double ay = static_cast<double>(a.at(x, yp)) - a.at(x, ym);
        const double by = static_cast<double>(bw.at(x, yp)) - bw.at(x, ym);
        gx[x] = static_cast<float>(0.25 * (ax + bx));
        gy[x] = static_cast<float>(0.25 * (ay + by));
        gt[x] = static_cast<float>(static_cast<double>(bw.at(x, y)) - a.at(x, y));
    }
}

inline void row_flow_solve(const Plane& gx, const Plane& gy, const Plane& gt,
                           const FlowField& flow, int y, int radius, double lambda,
                           double max_step, float* out_row) {
    const int w = gx.width;
    const int hmax = gx.height - 1;
    for (int x = 0; x < w; ++x) {
        double sxx = 0.0, sxy = 0.0, syy = 0.0, sxt = 0.0, syt = 0.0;
        for (int j = -radius; j <= radius; ++j) {
            const int yy = clamp_index(y + j, hmax);
            for (int i = -radius; i <= radius; ++i) {
                const int xx = clamp_index(x + i, w - 1);
                const double ix = gx.at(xx, yy);
                const double iy = gy.at(xx, yy);
                const double it = gt.at(xx, yy);
                sxx += ix * ix;
                sxy += ix * iy;
                syy += iy * iy;
                sxt += ix * it;
                syt += iy * it;
            }
        }
        sxx += lambda;
        syy += lambda;
        // det >= lambda^2 by Cauchy-Schwarz; the solve is always well posed.
        const double det = sxx * syy - sxy * sxy;
        double du = -(syy * sxt - sxy * syt) / det;
        double dv = -(sxx * syt - sxy * sxt) / det;
        du = std::clamp(du, -max_step, max_step);
        dv = std::clamp(dv, -max_step, max_step);
        out_row[2 * x] = static_cast<float>(flow.dx(x, y) + du);
        out_row[2 * x + 1] = static_cast<float>(flow.dy(x, y) + dv);
    }
}

struct RowErrorSums {
    double abs_sum = 0.0;
    double sq_sum = 0.0;
};

inline RowErrorSums row_error_sums(const float* a, const float* b, int n) {
    RowErrorSums s;
    for (int i = 0; i < n; ++i) {
        const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        s.abs_sum += std::fabs(d);
        s.sq_sum += d * d;
    }
    return s;
}

} // namespace hdrv::kernels::detail
