#include "hdrv/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "hdrv/kernels.hpp"

namespace hdrv {

namespace {

double psnr_from_mse(double mse) {
    if (mse <= 0.0) return kPsnrCap;
    return std::min(10.0 * std::log10(1.0 / mse), kPsnrCap);
}

double mse(const PixelBuffer& a, const PixelBuffer& b) {
    require_same_shape(a, b, "metrics");
    const kernels::ErrorSums sums = kernels::error_sums(a, b);
    return sums.sq_sum / static_cast<double>(sums.count);
}

} // namespace

double psnr(const PixelBuffer& a, const PixelBuffer& b) { return psnr_from_mse(mse(a, b)); }

double mu_psnr(const RadianceFrame& pred, const RadianceFrame& gt, const MuLawParams& params) {
    const PixelBuffer tp = mu_law(pred, params);
    const PixelBuffer tg = mu_law(gt, params);
    return psnr_from_mse(mse(tp, tg));
}

double l1_tonemapped(const RadianceFrame& pred, const RadianceFrame& gt,
                     const MuLawParams& params) {
    const PixelBuffer tp = mu_law(pred, params);
    const PixelBuffer tg = mu_law(gt, params);
    require_same_shape(tp, tg, "metrics");
    const kernels::ErrorSums sums = kernels::error_sums(tp, tg);
    return sums.abs_sum / static_cast<double>(sums.count);
}

SequenceReport sequence_report(const std::vector<RadianceFrame>& preds,
                               const std::vector<RadianceFrame>& gts,
                               const std::vector<FrameProvenance>& provenance,
                               const std::vector<Timestamp>& timestamps,
                               const MuLawParams& params) {
    if (preds.size() != gts.size() || preds.size() != provenance.size() ||
        preds.size() != timestamps.size())
        raise(ErrorCode::invalid_input, "sequence_report: list lengths differ");

    SequenceReport report;
    double psnr_all = 0.0, l1_all = 0.0, psnr_synth = 0.0, l1_synth = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const double ref = max_radiance(gts[i]);
        const double reference_max = ref > 0.0 ? ref : 1.0;
        const RadianceFrame pred_n = normalize_radiance(preds[i], reference_max);
        const RadianceFrame gt_n = normalize_radiance(gts[i], reference_max);

        FrameScore score;
        score.index = i;
        score.time = timestamps[i];
        score.provenance = provenance[i];
        score.mu_psnr_db = mu_psnr(pred_n, gt_n, params);
        score.l1 = l1_tonemapped(pred_n, gt_n, params);
        report.frames.push_back(score);

        psnr_all += score.mu_psnr_db;
        l1_all += score.l1;
        ++report.count_all;
        if (!provenance[i].is_real()) {
            psnr_synth += score.mu_psnr_db;
            l1_synth += score.l1;
            ++report.count_synth;
        }
    }
    if (report.count_all > 0) {
        report.mean_mu_psnr_all = psnr_all / static_cast<double>(report.count_all);
        report.mean_l1_all = l1_all / static_cast<double>(report.count_all);
    }
    if (report.count_synth > 0) {
        report.mean_mu_psnr_synth = psnr_synth / static_cast<double>(report.count_synth);
        report.mean_l1_synth = l1_synth / static_cast<double>(report.count_synth);
    }
    return report;
}

} // namespace hdrv
