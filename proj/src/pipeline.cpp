#include "hdrv/pipeline.hpp"

#include <algorithm>

#include "hdrv/merge.hpp"

namespace hdrv {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

void reduce(Timestamp& t) {
    while (t.den > 1 && (t.num & 1) == 0) {
        t.num >>= 1;
        t.den >>= 1;
    }
}

} // namespace

Timestamp Timestamp::of(std::int64_t num, std::int64_t den) {
    if (!is_power_of_two(den))
        raise(ErrorCode::invalid_parameter,
              "timestamp denominator must be a positive power of two");
    Timestamp t{num, den};
    reduce(t);
    return t;
}

Timestamp Timestamp::midpoint(const Timestamp& a, const Timestamp& b) {
    const std::int64_t den = std::max(a.den, b.den);
    const std::int64_t num = a.num * (den / a.den) + b.num * (den / b.den);
    return of(num, 2 * den);
}

Timestamp Timestamp::parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
        raise(ErrorCode::format_error, "timestamp must have the form <num>/<den>: " + text);
    std::size_t pos_num = 0, pos_den = 0;
    std::int64_t num = 0, den = 0;
    try {
        num = std::stoll(text.substr(0, slash), &pos_num);
        den = std::stoll(text.substr(slash + 1), &pos_den);
    } catch (const std::exception&) {
        raise(ErrorCode::format_error, "invalid timestamp: " + text);
    }
    if (pos_num != slash || pos_den != text.size() - slash - 1)
        raise(ErrorCode::format_error, "invalid timestamp: " + text);
    if (!is_power_of_two(den))
        raise(ErrorCode::format_error, "timestamp denominator is not a power of two: " + text);
    return of(num, den);
}

std::string Timestamp::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

AlternatingSequence AlternatingSequence::from_frames(std::vector<LdrFrame> frames,
                                                     double frame_interval) {
    if (frames.empty())
        raise(ErrorCode::invalid_input, "alternating sequence: no frames");
    double exposure_by_tag[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const LdrFrame& f = frames[i];
        if (!f.pixels.same_shape(frames[0].pixels))
            raise(ErrorCode::shape_mismatch, "alternating sequence: frame dimensions differ");
        const ExposureTag expect =
            (i % 2 == 0) ? frames[0].tag : opposite(frames[0].tag);
        if (f.tag != expect)
            raise(ErrorCode::exposure_mismatch,
                  "alternating sequence: tags do not strictly alternate");
        double& exposure = exposure_by_tag[f.tag == ExposureTag::High ? 0 : 1];
        if (exposure == 0.0)
            exposure = f.exposure_time;
        else if (exposure != f.exposure_time)
            raise(ErrorCode::exposure_mismatch,
                  "alternating sequence: exposure time varies within a tag class");
    }
    AlternatingSequence seq;
    seq.start_tag = frames[0].tag;
    seq.frames = std::move(frames);
    seq.frame_interval = frame_interval;
    return seq;
}

namespace {

std::vector<StreamFrame>& stream_for(ExposureStreams& streams, ExposureTag tag) {
    return tag == ExposureTag::High ? streams.high : streams.low;
}

void require_aligned_streams(const ExposureStreams& streams) {
    if (streams.high.empty() || streams.low.empty())
        raise(ErrorCode::invalid_input, "exposure streams are empty");
    if (streams.high.size() != streams.low.size())
        raise(ErrorCode::invalid_input, "exposure streams cover different timestamp counts");
    for (std::size_t i = 0; i < streams.high.size(); ++i)
        if (!(streams.high[i].time == streams.low[i].time))
            raise(ErrorCode::invalid_input, "exposure streams cover different timestamps");
}

void require_consumable(const StreamFrame& f, int level) {
    if (!f.provenance.is_real() && f.provenance.level.value_or(0) >= level)
        raise(ErrorCode::data_error,
              "recursion level " + std::to_string(level) +
                  " consumed a frame of level " + std::to_string(*f.provenance.level));
}

} // namespace

ExposureStreams complete_exposure_streams(const AlternatingSequence& seq,
                                          const InterpolationBackend& backend) {
    const std::size_t n = seq.size();
    if (n < 3)
        raise(ErrorCode::too_short, "sequence needs at least 3 frames");

    ExposureStreams streams;
    for (std::size_t t = 1; t + 1 < n; ++t) {
        const LdrFrame& reference = seq.frames[t];
        StreamFrame real;
        real.time = Timestamp::integer(static_cast<std::int64_t>(t));
        real.frame = reference;
        real.provenance = FrameProvenance::real();
        stream_for(streams, reference.tag).push_back(std::move(real));

        // The same-tag neighbours of the missing exposure sit at t-1, t+1.
        StreamFrame synth;
        synth.time = Timestamp::integer(static_cast<std::int64_t>(t));
        synth.frame = interpolate(seq.frames[t - 1], seq.frames[t + 1], 0.5, backend);
        synth.provenance = FrameProvenance::synthesized(0);
        stream_for(streams, opposite(reference.tag)).push_back(std::move(synth));
    }
    return streams;
}

ExposureStreams upscale_streams(const ExposureStreams& streams, int k,
                                const InterpolationBackend& backend) {
    if (k < 0)
        raise(ErrorCode::invalid_parameter, "upscale factor exponent must be >= 0");
    require_aligned_streams(streams);

    ExposureStreams out = streams;
    for (int level = 1; level <= k; ++level) {
        for (std::vector<StreamFrame>* stream : {&out.high, &out.low}) {
            std::vector<StreamFrame> next;
            next.reserve(stream->size() * 2 - 1);
            for (std::size_t i = 0; i + 1 < stream->size(); ++i) {
                const StreamFrame& left = (*stream)[i];
                const StreamFrame& right = (*stream)[i + 1];
                require_consumable(left, level);
                require_consumable(right, level);

                next.push_back(left);
                StreamFrame mid;
                mid.time = Timestamp::midpoint(left.time, right.time);
                mid.frame = interpolate(left.frame, right.frame, 0.5, backend);
                mid.provenance = FrameProvenance::synthesized(level);
                next.push_back(std::move(mid));
            }
            next.push_back(stream->back());
            *stream = std::move(next);
        }
    }
    return out;
}

std::vector<MergedFrame> merge_streams(const ExposureStreams& streams, const Crf& crf) {
    require_aligned_streams(streams);
    std::vector<MergedFrame> out;
    out.reserve(streams.high.size());
    for (std::size_t i = 0; i < streams.high.size(); ++i) {
        const StreamFrame& high = streams.high[i];
        const StreamFrame& low = streams.low[i];

        MergedFrame merged;
        merged.time = high.time;
        merged.radiance = merge_hdr(high.frame, low.frame, crf);
        if (high.provenance.is_real() || low.provenance.is_real()) {
            merged.provenance = FrameProvenance::real();
            merged.reference_tag =
                high.provenance.is_real() ? ExposureTag::High : ExposureTag::Low;
        } else {
            merged.provenance = FrameProvenance::synthesized(
                std::max(high.provenance.level.value_or(0), low.provenance.level.value_or(0)));
        }
        out.push_back(std::move(merged));
    }
    return out;
}

std::vector<MergedFrame> reconstruct_standard(const AlternatingSequence& seq,
                                              const InterpolationBackend& backend,
                                              const Crf& crf) {
    return merge_streams(complete_exposure_streams(seq, backend), crf);
}

std::vector<MergedFrame> upscale_fps(const ExposureStreams& streams, int k,
                                     const InterpolationBackend& backend, const Crf& crf) {
    return merge_streams(upscale_streams(streams, k, backend), crf);
}

} // namespace hdrv
