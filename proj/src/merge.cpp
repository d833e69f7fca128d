#include "hdrv/merge.hpp"

#include "hdrv/kernels.hpp"
#include "hdrv/radiometry.hpp"

namespace hdrv {

namespace {
void require_merge_pair(const LdrFrame& high, const LdrFrame& low) {
    require_same_shape(high.pixels, low.pixels, "merge");
    if (high.tag != ExposureTag::High || low.tag != ExposureTag::Low)
        raise(ErrorCode::exposure_mismatch, "merge: expected a (High, Low) frame pair");
}
} // namespace

AttentionMaps attention_weights(const LdrFrame& high, const LdrFrame& low) {
    require_merge_pair(high, low);
    AttentionMaps maps;
    kernels::attention_maps(high.pixels, low.pixels, kAttentionFloor, kSaturationThreshold,
                            kDarkThreshold, maps.w_high, maps.w_low);
    return maps;
}

RadianceFrame merge_hdr(const LdrFrame& high, const LdrFrame& low, const Crf& crf) {
    require_merge_pair(high, low);
    if (high.exposure_time == low.exposure_time)
        raise(ErrorCode::degenerate_pair, "merge: exposure times are equal");
    if (high.exposure_time < low.exposure_time)
        raise(ErrorCode::degenerate_pair, "merge: high exposure is shorter than low");

    const RadianceFrame h_high = ldr_to_radiance(high, crf);
    const RadianceFrame h_low = ldr_to_radiance(low, crf);
    const AttentionMaps maps = attention_weights(high, low);

    RadianceFrame out;
    kernels::weighted_merge(h_high.pixels, h_low.pixels, maps.w_high, maps.w_low, out.pixels);
    return out;
}

} // namespace hdrv
