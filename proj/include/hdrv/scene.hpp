#pragma once

#include <variant>
#include <vector>

#include "hdrv/image.hpp"

namespace hdrv {

// Procedural scene elements, all with constant velocity so ground truth is
// available at arbitrary fractional timestamps.

struct GaussianBlob {
    double center_x = 0.0;
    double center_y = 0.0;
    double sigma = 8.0;
    double peak[3] = {1.0, 1.0, 1.0}; // radiance added at the centre
    double velocity_x = 0.0;          // pixels/frame
    double velocity_y = 0.0;
};

// Radiance ramps linearly from `start` at x=0 to `stop` at x=width-1.
struct LinearRamp {
    double start[3] = {0.0, 0.0, 0.0};
    double stop[3] = {1.0, 1.0, 1.0};
};

// Axis-aligned rectangle with exact pixel-coverage anti-aliasing, so the
// render stays analytic at fractional positions.
struct ConstantPlate {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 0.0, y1 = 0.0;
    double radiance[3] = {1.0, 1.0, 1.0};
    double velocity_x = 0.0;
    double velocity_y = 0.0;
};

using SceneElement = std::variant<GaussianBlob, LinearRamp, ConstantPlate>;

struct SceneSpec {
    int width = 0;
    int height = 0;
    int duration = 0; // frames
    double background[3] = {0.0, 0.0, 0.0};
    std::vector<SceneElement> elements;
};

// Deterministic analytic render of the scene at (possibly fractional) time
// t; element contributions are summed over the background.
RadianceFrame procedural_scene(const SceneSpec& spec, double t);

// Ready-made scenes used by the test and demo tooling.
SceneSpec static_test_scene(int width, int height, int duration);
SceneSpec moving_blob_scene(int width, int height, int duration, double velocity_x,
                            double velocity_y);
// Several blobs and a plate drifting at different constant velocities over
// a static ramp; the standard scene for motion-degradation studies.
SceneSpec drifting_scene(int width, int height, int duration);

} // namespace hdrv
