#pragma once

#include <optional>
#include <vector>

#include "hdrv/pipeline.hpp"
#include "hdrv/tonemap.hpp"

namespace hdrv {

inline constexpr double kPsnrCap = 99.0; // reported for identical frames

enum class EvalMask { all, synthesized_only };

struct FrameScore {
    std::size_t index = 0;
    Timestamp time;
    FrameProvenance provenance;
    double mu_psnr_db = 0.0;
    double l1 = 0.0;
};

struct SequenceReport {
    std::vector<FrameScore> frames;
    double mean_mu_psnr_all = 0.0;
    double mean_l1_all = 0.0;
    std::size_t count_all = 0;
    // Means over frames with no captured constituent; unset when the mask
    // selects nothing.
    std::optional<double> mean_mu_psnr_synth;
    std::optional<double> mean_l1_synth;
    std::size_t count_synth = 0;
};

// Peak signal-to-noise ratio over raw [0,1] samples, capped at kPsnrCap.
double psnr(const PixelBuffer& a, const PixelBuffer& b);

// PSNR over mu-law tonemapped channels. Callers must normalize both frames
// by the same reference (the ground-truth maximum).
double mu_psnr(const RadianceFrame& pred, const RadianceFrame& gt,
               const MuLawParams& params = {});

// Mean absolute difference of the tonemapped frames; same preconditions.
double l1_tonemapped(const RadianceFrame& pred, const RadianceFrame& gt,
                     const MuLawParams& params = {});

// Normalizes each pair by the ground-truth frame's maximum, scores it and
// aggregates means per mask. PSNR means are arithmetic means in dB.
SequenceReport sequence_report(const std::vector<RadianceFrame>& preds,
                               const std::vector<RadianceFrame>& gts,
                               const std::vector<FrameProvenance>& provenance,
                               const std::vector<Timestamp>& timestamps,
                               const MuLawParams& params = {});

} // namespace hdrv
