#pragma once

#include <string_view>
#include <vector>

#include "hdrv/flow.hpp"
#include "hdrv/image.hpp"

namespace hdrv {

struct VisibilityMap {
    Plane weights; // per-pixel confidence in [0,1]
};

// Synthesizes the frame at fractional time tau between two frames of the
// same exposure. Implementations must be deterministic and satisfy
// interpolate(A, A, tau) == A exactly.
class InterpolationBackend {
public:
    virtual ~InterpolationBackend() = default;
    virtual std::string_view name() const = 0;
    virtual LdrFrame run(const LdrFrame& a, const LdrFrame& b, double tau) const = 0;
};

// Looks a backend up by name ("blend", "flow"); unknown names raise
// invalid_parameter.
const InterpolationBackend& get_backend(std::string_view name);
std::vector<std::string_view> backend_names();

// Validates the pair (shape, tag, exposure, tau in (0,1)) and runs the
// backend. The result carries A's tag and exposure time.
LdrFrame interpolate(const LdrFrame& a, const LdrFrame& b, double tau,
                     const InterpolationBackend& backend);

// Normalized convex combination of the two warped frames:
// [(1-tau)*Va*Wa + tau*Vb*Wb] / [(1-tau)*Va + tau*Vb], falling back to the
// plain average where the denominator is below 1e-6.
LdrFrame blend_with_visibility(const LdrFrame& warp_a, const LdrFrame& warp_b,
                               const VisibilityMap& vis_a, const VisibilityMap& vis_b,
                               double tau);

// V(p) = exp(-|fwd(p) + bwd(p + fwd(p))| / sigma): forward-backward flow
// consistency as occlusion confidence.
VisibilityMap visibility_from_flow(const FlowField& forward, const FlowField& backward,
                                   double sigma = 2.0);

} // namespace hdrv
