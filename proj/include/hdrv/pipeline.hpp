#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdrv/image.hpp"
#include "hdrv/interpolate.hpp"

namespace hdrv {

// Dyadic rational time in units of the input frame index, kept in reduced
// form so timestamps stay exact under repeated midpoint insertion.
struct Timestamp {
    std::int64_t num = 0;
    std::int64_t den = 1; // power of two

    static Timestamp of(std::int64_t num, std::int64_t den);
    static Timestamp integer(std::int64_t t) { return Timestamp{t, 1}; }
    static Timestamp midpoint(const Timestamp& a, const Timestamp& b);
    static Timestamp parse(const std::string& text);

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const Timestamp& a, const Timestamp& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Timestamp& a, const Timestamp& b) {
        return a.num * b.den < b.num * a.den;
    }
};

struct FrameProvenance {
    enum class Kind : std::uint8_t { Real, Synthesized };
    Kind kind = Kind::Real;
    std::optional<int> level; // recursion depth for synthesized frames (0 = exposure completion)

    static FrameProvenance real() { return {Kind::Real, std::nullopt}; }
    static FrameProvenance synthesized(int level) { return {Kind::Synthesized, level}; }
    bool is_real() const { return kind == Kind::Real; }
};

// Captured alternating-exposure timeline. Tags strictly alternate, all
// frames share dimensions and each tag class has one exposure time.
struct AlternatingSequence {
    std::vector<LdrFrame> frames;
    ExposureTag start_tag = ExposureTag::High;
    double frame_interval = 1.0; // seconds, nominal

    static AlternatingSequence from_frames(std::vector<LdrFrame> frames,
                                           double frame_interval = 1.0);
    std::size_t size() const { return frames.size(); }
};

struct StreamFrame {
    Timestamp time;
    LdrFrame frame;
    FrameProvenance provenance;
};

// Both exposures on one shared dyadic timeline.
struct ExposureStreams {
    std::vector<StreamFrame> high;
    std::vector<StreamFrame> low;
};

struct MergedFrame {
    Timestamp time;
    RadianceFrame radiance;
    FrameProvenance provenance;             // real = anchored on a captured frame
    std::optional<ExposureTag> reference_tag; // tag of the captured constituent, if any
};

// Fills in the missing exposure at every interior integer timestamp from
// its two same-tag neighbours (tau = 0.5). Streams cover t in [1, n-2].
ExposureStreams complete_exposure_streams(const AlternatingSequence& seq,
                                          const InterpolationBackend& backend);

// Runs k rounds of midpoint insertion on each stream independently; level
// r inserts frames at odd multiples of 1/2^r between existing neighbours.
ExposureStreams upscale_streams(const ExposureStreams& streams, int k,
                                const InterpolationBackend& backend);

// Fuses the two streams per timestamp via merge_hdr.
std::vector<MergedFrame> merge_streams(const ExposureStreams& streams, const Crf& crf = {});

// Standard-rate reconstruction: one merged radiance frame per interior
// integer timestamp; endpoints are dropped.
std::vector<MergedFrame> reconstruct_standard(const AlternatingSequence& seq,
                                              const InterpolationBackend& backend,
                                              const Crf& crf = {});

// Frame-rate upscaling by 2^k: upscale_streams followed by merge_streams.
// Output count is (m-1)*2^k + 1 for stream length m.
std::vector<MergedFrame> upscale_fps(const ExposureStreams& streams, int k,
                                     const InterpolationBackend& backend, const Crf& crf = {});

} // namespace hdrv
