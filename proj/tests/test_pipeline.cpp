#include <doctest.h>

#include <cmath>

#include "hdrv/dataset.hpp"
#include "hdrv/metrics.hpp"
#include "hdrv/pipeline.hpp"
#include "hdrv/radiometry.hpp"
#include "test_util.hpp"

using namespace hdrv;
using namespace hdrv::testutil;

namespace {

AlternatingSequence static_sequence(int n, int size = 24, BitDepth depth = BitDepth::b16) {
    const SceneSpec scene = static_test_scene(size, size, n);
    std::vector<RadianceFrame> gt;
    for (int i = 0; i < n; ++i) gt.push_back(procedural_scene(scene, i));
    ExposureProgram program;
    program.stops = 2;
    return simulate_alternating(gt, program, depth).sequence;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("alternating sequence invariants are validated") {
    const PixelBuffer px = uniform_buffer(8, 8, 0.5f);
    std::vector<LdrFrame> ok = {make_ldr(px, 1.0, ExposureTag::High),
                                make_ldr(px, 0.25, ExposureTag::Low),
                                make_ldr(px, 1.0, ExposureTag::High)};
    const AlternatingSequence seq = AlternatingSequence::from_frames(ok);
    CHECK(seq.start_tag == ExposureTag::High);

    std::vector<LdrFrame> bad_tags = {make_ldr(px, 1.0, ExposureTag::High),
                                      make_ldr(px, 1.0, ExposureTag::High)};
    CHECK_THROWS_AS(AlternatingSequence::from_frames(bad_tags), Error);

    std::vector<LdrFrame> bad_exposure = {make_ldr(px, 1.0, ExposureTag::High),
                                          make_ldr(px, 0.25, ExposureTag::Low),
                                          make_ldr(px, 0.9, ExposureTag::High)};
    CHECK_THROWS_AS(AlternatingSequence::from_frames(bad_exposure), Error);

    std::vector<LdrFrame> bad_shape = {make_ldr(px, 1.0, ExposureTag::High),
                                       make_ldr(uniform_buffer(8, 9, 0.5f), 0.25,
                                                ExposureTag::Low)};
    CHECK_THROWS_AS(AlternatingSequence::from_frames(bad_shape), Error);

    CHECK_THROWS_AS(AlternatingSequence::from_frames({}), Error);
}

TEST_CASE("stream completion covers interior timestamps with the right parity") {
    const PixelBuffer px = uniform_buffer(16, 16, 0.4f);
    std::vector<LdrFrame> frames = {
        make_ldr(px, 1.0, ExposureTag::High), make_ldr(px, 0.25, ExposureTag::Low),
        make_ldr(px, 1.0, ExposureTag::High), make_ldr(px, 0.25, ExposureTag::Low)};
    const AlternatingSequence seq = AlternatingSequence::from_frames(frames);
    const ExposureStreams streams = complete_exposure_streams(seq, get_backend("blend"));

    REQUIRE(streams.high.size() == 2);
    REQUIRE(streams.low.size() == 2);
    // t=1: the captured frame is Low, so the high stream holds a synthetic
    // frame built from t=0 and t=2; t=2 is the mirror case.
    CHECK(streams.high[0].time == Timestamp::integer(1));
    CHECK(!streams.high[0].provenance.is_real());
    CHECK(streams.high[0].provenance.level == 0);
    CHECK(streams.low[0].provenance.is_real());
    CHECK(streams.high[1].provenance.is_real());
    CHECK(!streams.low[1].provenance.is_real());

    SUBCASE("too-short sequences are rejected") {
        std::vector<LdrFrame> two = {frames[0], frames[1]};
        CHECK_THROWS_AS(complete_exposure_streams(AlternatingSequence::from_frames(two),
                                                  get_backend("blend")),
                        Error);
    }

    SUBCASE("n=8 covers 6 timestamps per stream") {
        const AlternatingSequence seq8 = static_sequence(8);
        const ExposureStreams s8 = complete_exposure_streams(seq8, get_backend("blend"));
        CHECK(s8.high.size() == 6);
        CHECK(s8.low.size() == 6);
    }
}

TEST_CASE("static scene reconstructs ground truth within quantization") {
    const int n = 5;
    const SceneSpec scene = static_test_scene(24, 24, n);
    std::vector<RadianceFrame> gt;
    for (int i = 0; i < n; ++i) gt.push_back(procedural_scene(scene, i));
    ExposureProgram program;
    program.stops = 2;
    const SimulatedSequence sim = simulate_alternating(gt, program, BitDepth::b16);

    const std::vector<MergedFrame> merged =
        reconstruct_standard(sim.sequence, get_backend("flow"));
    REQUIRE(merged.size() == n - 2);

    const double bound = 2.2 * 0.5001 / 65535.0 / program.low_exposure();
    for (std::size_t i = 0; i < merged.size(); ++i) {
        CHECK(merged[i].time == Timestamp::integer(static_cast<std::int64_t>(i) + 1));
        CHECK(max_abs_diff(merged[i].radiance.pixels, gt[i + 1].pixels) <= bound);
    }

    SUBCASE("n=4 yields frames at t=1 and t=2") {
        const AlternatingSequence seq4 = static_sequence(4);
        const std::vector<MergedFrame> out = reconstruct_standard(seq4, get_backend("blend"));
        REQUIRE(out.size() == 2);
        CHECK(out[0].time == Timestamp::integer(1));
        CHECK(out[1].time == Timestamp::integer(2));
    }
}

TEST_CASE("translating scene reconstructs above 35 dB with the flow backend") {
    const int n = 5;
    const SceneSpec scene = moving_blob_scene(128, 128, n, 6.0, 0.0);
    std::vector<RadianceFrame> gt;
    for (int i = 0; i < n; ++i) gt.push_back(procedural_scene(scene, i));
    ExposureProgram program;
    program.stops = 2;
    const SimulatedSequence sim = simulate_alternating(gt, program, BitDepth::b16);

    const std::vector<MergedFrame> merged =
        reconstruct_standard(sim.sequence, get_backend("flow"));
    std::vector<RadianceFrame> preds, truths;
    std::vector<FrameProvenance> prov;
    std::vector<Timestamp> times;
    for (const MergedFrame& m : merged) {
        preds.push_back(m.radiance);
        truths.push_back(gt[static_cast<std::size_t>(m.time.num)]);
        prov.push_back(m.provenance);
        times.push_back(m.time);
    }
    const SequenceReport report = sequence_report(preds, truths, prov, times);
    CHECK(report.mean_mu_psnr_all >= 35.0);
}

TEST_CASE("reconstruction anchors every integer frame on one captured input") {
    const AlternatingSequence seq = static_sequence(6);
    const std::vector<MergedFrame> merged = reconstruct_standard(seq, get_backend("blend"));
    ExposureTag expect = seq.frames[1].tag;
    for (const MergedFrame& f : merged) {
        CHECK(f.provenance.is_real());
        REQUIRE(f.reference_tag.has_value());
        CHECK(*f.reference_tag == expect);
        expect = opposite(expect);
    }
}

TEST_CASE("upscaling with k=0 merges the completed streams unchanged") {
    const AlternatingSequence seq = static_sequence(5);
    const ExposureStreams streams = complete_exposure_streams(seq, get_backend("blend"));
    const std::vector<MergedFrame> direct = reconstruct_standard(seq, get_backend("blend"));
    const std::vector<MergedFrame> via_upscale = upscale_fps(streams, 0, get_backend("blend"));
    REQUIRE(direct.size() == via_upscale.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].time == via_upscale[i].time);
        CHECK(buffers_equal(direct[i].radiance.pixels, via_upscale[i].radiance.pixels));
    }
}

TEST_CASE("recursive upscaling produces exact dyadic timelines") {
    const AlternatingSequence seq = static_sequence(8, 20);
    const ExposureStreams streams = complete_exposure_streams(seq, get_backend("blend"));
    const int k = 3;
    const std::vector<MergedFrame> merged = upscale_fps(streams, k, get_backend("blend"));

    // (m-1)*2^k + 1 with m = 6.
    REQUIRE(merged.size() == 41);
    for (std::size_t i = 0; i < merged.size(); ++i) {
        const Timestamp expected = Timestamp::of(8 + static_cast<std::int64_t>(i), 8);
        CHECK(merged[i].time == expected);
        CHECK(merged[i].time.den <= 8);
    }

    SUBCASE("static input stays constant across the upscaled timeline") {
        double worst = 0.0;
        for (std::size_t i = 1; i < merged.size(); ++i)
            worst = std::max(worst,
                             max_abs_diff(merged[i].radiance.pixels, merged[0].radiance.pixels));
        CHECK(worst <= 1e-5);
    }

    SUBCASE("provenance levels track the recursion depth") {
        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (merged[i].time.is_integer()) {
                CHECK(merged[i].provenance.is_real());
            } else {
                CHECK(!merged[i].provenance.is_real());
                // Odd multiples of 1/2^r are created at level r.
                int level = 0;
                std::int64_t den = merged[i].time.den;
                while (den > 1) {
                    den >>= 1;
                    ++level;
                }
                CHECK(merged[i].provenance.level == level);
            }
        }
    }
}

TEST_CASE("upscaling validates its inputs") {
    const AlternatingSequence seq = static_sequence(4);
    const ExposureStreams streams = complete_exposure_streams(seq, get_backend("blend"));
    CHECK_THROWS_AS(upscale_streams(streams, -1, get_backend("blend")), Error);

    SUBCASE("level ordering violations are detected") {
        ExposureStreams corrupt = streams;
        corrupt.high[0].provenance = FrameProvenance::synthesized(5);
        CHECK_THROWS_AS(upscale_streams(corrupt, 1, get_backend("blend")), Error);
    }

    SUBCASE("misaligned streams are rejected") {
        ExposureStreams bad = streams;
        bad.low.pop_back();
        CHECK_THROWS_AS(merge_streams(bad), Error);
        ExposureStreams empty;
        CHECK_THROWS_AS(merge_streams(empty), Error);
    }
}

} // TEST_SUITE
