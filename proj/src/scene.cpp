#include "hdrv/scene.hpp"

#include <algorithm>
#include <cmath>

namespace hdrv {

namespace {

void add_blob(PixelBuffer& img, const GaussianBlob& blob, double t) {
    const double cx = blob.center_x + t * blob.velocity_x;
    const double cy = blob.center_y + t * blob.velocity_y;
    const double inv_two_sigma2 = 1.0 / (2.0 * blob.sigma * blob.sigma);
    for (int y = 0; y < img.height; ++y) {
        const double dy = y - cy;
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx;
            const double g = std::exp(-(dx * dx + dy * dy) * inv_two_sigma2);
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) += static_cast<float>(blob.peak[c] * g);
        }
    }
}

void add_ramp(PixelBuffer& img, const LinearRamp& ramp) {
    const double denom = img.width > 1 ? img.width - 1.0 : 1.0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const double f = x / denom;
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) +=
                    static_cast<float>(ramp.start[c] + f * (ramp.stop[c] - ramp.start[c]));
        }
}

double overlap(double lo, double hi, double a, double b) {
    return std::max(0.0, std::min(hi, b) - std::max(lo, a));
}

void add_plate(PixelBuffer& img, const ConstantPlate& plate, double t) {
    const double x0 = plate.x0 + t * plate.velocity_x;
    const double x1 = plate.x1 + t * plate.velocity_x;
    const double y0 = plate.y0 + t * plate.velocity_y;
    const double y1 = plate.y1 + t * plate.velocity_y;
    const int px0 = std::max(0, static_cast<int>(std::floor(x0 - 0.5)));
    const int px1 = std::min(img.width - 1, static_cast<int>(std::ceil(x1 + 0.5)));
    const int py0 = std::max(0, static_cast<int>(std::floor(y0 - 0.5)));
    const int py1 = std::min(img.height - 1, static_cast<int>(std::ceil(y1 + 0.5)));
    for (int y = py0; y <= py1; ++y) {
        // Pixel (x, y) integrates the unit square centred on it.
        const double cov_y = overlap(y - 0.5, y + 0.5, y0, y1);
        if (cov_y <= 0.0) continue;
        for (int x = px0; x <= px1; ++x) {
            const double cov = cov_y * overlap(x - 0.5, x + 0.5, x0, x1);
            if (cov <= 0.0) continue;
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) += static_cast<float>(plate.radiance[c] * cov);
        }
    }
}

} // namespace

RadianceFrame procedural_scene(const SceneSpec& spec, double t) {
    if (spec.width <= 0 || spec.height <= 0)
        raise(ErrorCode::invalid_parameter, "scene: dimensions must be positive");
    RadianceFrame out;
    out.pixels = PixelBuffer(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x)
            for (int c = 0; c < 3; ++c)
                out.pixels.at(x, y, c) = static_cast<float>(spec.background[c]);

    for (const SceneElement& element : spec.elements) {
        if (const auto* blob = std::get_if<GaussianBlob>(&element))
            add_blob(out.pixels, *blob, t);
        else if (const auto* ramp = std::get_if<LinearRamp>(&element))
            add_ramp(out.pixels, *ramp);
        else if (const auto* plate = std::get_if<ConstantPlate>(&element))
            add_plate(out.pixels, *plate, t);
    }
    return out;
}

SceneSpec static_test_scene(int width, int height, int duration) {
    SceneSpec spec;
    spec.width = width;
    spec.height = height;
    spec.duration = duration;
    spec.background[0] = 0.02;
    spec.background[1] = 0.025;
    spec.background[2] = 0.02;

    LinearRamp ramp;
    ramp.start[0] = 0.0;
    ramp.start[1] = 0.005;
    ramp.start[2] = 0.01;
    ramp.stop[0] = 0.25;
    ramp.stop[1] = 0.2;
    ramp.stop[2] = 0.15;
    spec.elements.push_back(ramp);

    GaussianBlob bright;
    bright.center_x = width * 0.35;
    bright.center_y = height * 0.4;
    bright.sigma = width * 0.06;
    bright.peak[0] = 0.55;
    bright.peak[1] = 0.5;
    bright.peak[2] = 0.4;
    spec.elements.push_back(bright);

    GaussianBlob dim;
    dim.center_x = width * 0.7;
    dim.center_y = height * 0.65;
    dim.sigma = width * 0.04;
    dim.peak[0] = 0.12;
    dim.peak[1] = 0.16;
    dim.peak[2] = 0.2;
    spec.elements.push_back(dim);

    ConstantPlate plate;
    plate.x0 = width * 0.1;
    plate.y0 = height * 0.72;
    plate.x1 = width * 0.28;
    plate.y1 = height * 0.88;
    plate.radiance[0] = 0.3;
    plate.radiance[1] = 0.28;
    plate.radiance[2] = 0.22;
    spec.elements.push_back(plate);
    return spec;
}

SceneSpec moving_blob_scene(int width, int height, int duration, double velocity_x,
                            double velocity_y) {
    SceneSpec spec;
    spec.width = width;
    spec.height = height;
    spec.duration = duration;
    spec.background[0] = 0.03;
    spec.background[1] = 0.03;
    spec.background[2] = 0.03;

    GaussianBlob blob;
    blob.center_x = width * 0.3;
    blob.center_y = height * 0.5;
    blob.sigma = width * 0.05;
    blob.peak[0] = 0.6;
    blob.peak[1] = 0.5;
    blob.peak[2] = 0.35;
    blob.velocity_x = velocity_x;
    blob.velocity_y = velocity_y;
    spec.elements.push_back(blob);
    return spec;
}

SceneSpec drifting_scene(int width, int height, int duration) {
    SceneSpec spec;
    spec.width = width;
    spec.height = height;
    spec.duration = duration;
    spec.background[0] = 0.02;
    spec.background[1] = 0.02;
    spec.background[2] = 0.025;

    LinearRamp ramp;
    ramp.stop[0] = 0.1;
    ramp.stop[1] = 0.09;
    ramp.stop[2] = 0.07;
    spec.elements.push_back(ramp);

    struct BlobInit {
        double fx, fy, sigma, peak, vx, vy;
    };
    const BlobInit blobs[] = {
        {0.18, 0.25, 5.0, 0.65, 2.5, 0.4},  {0.70, 0.20, 7.0, 0.45, -2.0, 0.8},
        {0.30, 0.70, 4.0, 0.80, 3.0, -0.5}, {0.75, 0.75, 9.0, 0.35, -2.5, -0.7},
        {0.50, 0.45, 6.0, 0.55, 1.5, 1.0},
    };
    for (const BlobInit& init : blobs) {
        GaussianBlob b;
        b.center_x = width * init.fx;
        b.center_y = height * init.fy;
        b.sigma = init.sigma;
        b.peak[0] = init.peak;
        b.peak[1] = init.peak * 0.8;
        b.peak[2] = init.peak * 0.6;
        b.velocity_x = init.vx;
        b.velocity_y = init.vy;
        spec.elements.push_back(b);
    }

    ConstantPlate plate;
    plate.x0 = width * 0.07;
    plate.y0 = height * 0.55;
    plate.x1 = width * 0.16;
    plate.y1 = height * 0.72;
    plate.radiance[0] = 0.5;
    plate.radiance[1] = 0.42;
    plate.radiance[2] = 0.3;
    plate.velocity_x = 2.0;
    plate.velocity_y = 0.3;
    spec.elements.push_back(plate);
    return spec;
}

} // namespace hdrv
