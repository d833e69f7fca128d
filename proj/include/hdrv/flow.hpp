#pragma once

#include "hdrv/kernels.hpp"

namespace hdrv {

struct FlowParams {
    int window_radius = 3;
    int iterations_per_level = 3;
    double regularization = 1e-3;
    int min_level_size = 16; // coarsest pyramid level is at least this wide/tall
};

// Dense flow A -> B over a coarse-to-fine pyramid (downsample factor 2,
// floor(log2(min(W,H)/16)) coarsening steps, iterative local least-squares
// refinement per level). Frames must share dimensions, tag and exposure.
FlowField estimate_flow(const LdrFrame& a, const LdrFrame& b, const FlowParams& params = {});

// out(p) = frame(p + scale*flow(p)) with bilinear sampling; out-of-bounds
// reads clamp to the edge.
LdrFrame warp_backward(const LdrFrame& frame, const FlowField& flow, double scale);

} // namespace hdrv
