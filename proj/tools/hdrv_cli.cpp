// hdrv: HDR video reconstruction from alternating-exposure LDR sequences.
//
// Subcommands: scene, synthesize, reconstruct, upscale, evaluate, export.
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hdrv/dataset.hpp"
#include "hdrv/manifest.hpp"
#include "hdrv/metrics.hpp"
#include "hdrv/pfm.hpp"
#include "hdrv/pnm.hpp"
#include "hdrv/rng.hpp"
#include "hdrv/runtime.hpp"
#include "hdrv/tonemap.hpp"

namespace fs = std::filesystem;
using namespace hdrv;

namespace {

bool g_verbose = false;

void log_progress(const std::string& message) {
    if (g_verbose) std::cerr << message << "\n";
}

std::string zero_padded(std::int64_t value, int width = 6) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& extension) {
    if (!fs::is_directory(dir))
        raise(ErrorCode::io_error, "not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == extension)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

struct SceneOptions {
    std::string out;
    std::string preset = "static";
    int frames = 9;
    int width = 256;
    int height = 256;
    double velocity_x = 8.0;
    double velocity_y = 0.0;
};

int run_scene(const SceneOptions& opt) {
    SceneSpec spec;
    if (opt.preset == "static")
        spec = static_test_scene(opt.width, opt.height, opt.frames);
    else if (opt.preset == "blob")
        spec = moving_blob_scene(opt.width, opt.height, opt.frames, opt.velocity_x,
                                 opt.velocity_y);
    else
        spec = drifting_scene(opt.width, opt.height, opt.frames);

    fs::create_directories(opt.out);
    for (int t = 0; t < opt.frames; ++t) {
        const fs::path path = fs::path(opt.out) / ("frame_" + zero_padded(t) + ".pfm");
        write_pfm(path, procedural_scene(spec, static_cast<double>(t)));
        log_progress("rendered " + path.string());
    }
    return 0;
}

struct SynthesizeOptions {
    std::string input;
    std::string out;
    double base_exposure = 1.0;
    std::string stops = "3";
    int bits = 16;
    std::string start_tag = "H";
    std::uint64_t seed = 0;
    double noise_sigma = 0.0;
};

int run_synthesize(const SynthesizeOptions& opt) {
    const std::vector<fs::path> inputs = sorted_files(opt.input, ".pfm");
    if (inputs.empty())
        raise(ErrorCode::data_error, "no .pfm frames in " + opt.input);

    ExposureProgram program;
    program.base_high_exposure = opt.base_exposure;
    program.start_tag = opt.start_tag == "H" ? ExposureTag::High : ExposureTag::Low;
    if (opt.stops == "random")
        program.stops = 1 + static_cast<int>(counter_below(opt.seed, 0, 3));
    else
        program.stops = std::stoi(opt.stops);

    std::vector<RadianceFrame> gt;
    gt.reserve(inputs.size());
    for (const fs::path& path : inputs) gt.push_back(read_pfm(path));

    const BitDepth depth = opt.bits == 8 ? BitDepth::b8 : BitDepth::b16;
    SensorNoise noise;
    noise.sigma = opt.noise_sigma;
    noise.seed = opt.seed;
    const SimulatedSequence sim = simulate_alternating(gt, program, depth, {}, noise);

    fs::create_directories(fs::path(opt.out) / "gt");
    Manifest manifest;
    for (std::size_t i = 0; i < sim.sequence.size(); ++i) {
        const LdrFrame& frame = sim.sequence.frames[i];
        const std::string name = "ldr_" + zero_padded(static_cast<std::int64_t>(i)) + ".ppm";
        write_pnm(fs::path(opt.out) / name, frame, opt.bits == 8 ? 255 : 65535);

        ManifestRecord record;
        record.index = static_cast<std::int64_t>(i);
        record.timestamp = Timestamp::integer(static_cast<std::int64_t>(i));
        record.filename = name;
        record.exposure_time_s = frame.exposure_time;
        record.tag = frame.tag;
        record.provenance = FrameProvenance::real();
        record.stops = program.stops;
        manifest.records.push_back(std::move(record));

        const fs::path gt_path =
            fs::path(opt.out) / "gt" / ("gt_" + zero_padded(static_cast<std::int64_t>(i)) + ".pfm");
        fs::copy_file(inputs[i], gt_path, fs::copy_options::overwrite_existing);
        log_progress("exposed " + name);
    }
    write_manifest(fs::path(opt.out) / "manifest.csv", manifest);
    return 0;
}

AlternatingSequence load_sequence(const fs::path& manifest_path, int* stops_out) {
    const Manifest manifest = read_manifest(manifest_path);
    if (manifest.records.empty())
        raise(ErrorCode::data_error, "manifest has no frames: " + manifest_path.string());

    const fs::path dir = manifest_path.parent_path();
    std::vector<LdrFrame> frames;
    frames.reserve(manifest.records.size());
    for (const ManifestRecord& record : manifest.records) {
        if (!record.provenance.is_real())
            raise(ErrorCode::data_error, "input manifest contains synthesized frames");
        if (!record.tag.has_value())
            raise(ErrorCode::data_error, "input manifest frame without exposure tag");
        frames.push_back(read_pnm(dir / record.filename, record.exposure_time_s, *record.tag));
    }
    if (stops_out) *stops_out = manifest.records.front().stops;
    return AlternatingSequence::from_frames(std::move(frames));
}

void write_merged_outputs(const std::vector<MergedFrame>& merged, const fs::path& out_dir,
                          int stops) {
    fs::create_directories(out_dir);
    Manifest manifest;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        const MergedFrame& frame = merged[i];
        const std::string name = "hdr_" + zero_padded(static_cast<std::int64_t>(i)) + ".pfm";
        write_pfm(out_dir / name, frame.radiance);

        ManifestRecord record;
        record.index = static_cast<std::int64_t>(i);
        record.timestamp = frame.time;
        record.filename = name;
        record.exposure_time_s = 0.0; // merged radiance is exposure-normalized
        record.tag = frame.reference_tag;
        record.provenance = frame.provenance;
        record.stops = stops;
        manifest.records.push_back(std::move(record));
        log_progress("merged " + name + " at t=" + frame.time.to_string());
    }
    write_manifest(out_dir / "manifest.csv", manifest);
}

struct ReconstructOptions {
    std::string manifest;
    std::string backend = "flow";
    std::string out;
};

int run_reconstruct(const ReconstructOptions& opt) {
    int stops = 0;
    const AlternatingSequence seq = load_sequence(opt.manifest, &stops);
    const std::vector<MergedFrame> merged =
        reconstruct_standard(seq, get_backend(opt.backend));
    write_merged_outputs(merged, opt.out, stops);
    return 0;
}

struct UpscaleOptions {
    std::string manifest;
    int factor = 2;
    std::string backend = "flow";
    std::string out;
};

int run_upscale(const UpscaleOptions& opt) {
    int k = 0;
    while ((1 << k) < opt.factor) ++k;
    int stops = 0;
    const AlternatingSequence seq = load_sequence(opt.manifest, &stops);
    const InterpolationBackend& backend = get_backend(opt.backend);
    const std::vector<MergedFrame> merged =
        upscale_fps(complete_exposure_streams(seq, backend), k, backend);
    write_merged_outputs(merged, opt.out, stops);
    return 0;
}

struct EvaluateOptions {
    std::string pred;
    std::string gt;
    std::string report;
    std::string mask = "all";
};

int run_evaluate(const EvaluateOptions& opt) {
    const Manifest manifest = read_manifest(fs::path(opt.pred) / "manifest.csv");
    const std::vector<fs::path> gt_files = sorted_files(opt.gt, ".pfm");

    std::vector<RadianceFrame> preds, gts;
    std::vector<FrameProvenance> provenance;
    std::vector<Timestamp> timestamps;
    for (const ManifestRecord& record : manifest.records) {
        if (!record.timestamp.is_integer()) continue; // no ground truth between frames
        const std::int64_t t = record.timestamp.num;
        if (t < 0 || t >= static_cast<std::int64_t>(gt_files.size()))
            raise(ErrorCode::data_error,
                  "frame count mismatch: prediction at t=" + std::to_string(t) + " but only " +
                      std::to_string(gt_files.size()) + " ground-truth frames");
        preds.push_back(read_pfm(fs::path(opt.pred) / record.filename));
        gts.push_back(read_pfm(gt_files[static_cast<std::size_t>(t)]));
        provenance.push_back(record.provenance);
        timestamps.push_back(record.timestamp);
    }
    if (preds.empty())
        raise(ErrorCode::data_error, "no integer-timestamp predictions to evaluate");

    const SequenceReport report = sequence_report(preds, gts, provenance, timestamps);

    std::ofstream out(opt.report, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(ErrorCode::io_error, "cannot write " + opt.report);
    out << "frame_index,timestamp,provenance,mu_psnr_db,l1\n";
    for (const FrameScore& score : report.frames)
        out << score.index << ',' << score.time.to_string() << ','
            << (score.provenance.is_real() ? "real" : "synth") << ','
            << format_double(score.mu_psnr_db) << ',' << format_double(score.l1) << "\n";

    if (opt.mask == "synth") {
        if (report.count_synth == 0) {
            std::cerr << "evaluated " << report.count_all
                      << " frames; no fully synthesized frames in mask\n";
        } else {
            std::cerr << "evaluated " << report.count_synth << " synthesized frames: mean mu-PSNR "
                      << *report.mean_mu_psnr_synth << " dB, mean L1 " << *report.mean_l1_synth
                      << "\n";
        }
    } else {
        std::cerr << "evaluated " << report.count_all << " frames: mean mu-PSNR "
                  << report.mean_mu_psnr_all << " dB, mean L1 " << report.mean_l1_all << "\n";
    }
    return 0;
}

struct ExportOptions {
    std::string input;
    std::string tonemap = "reinhard";
    std::string out;
};

int run_export(const ExportOptions& opt) {
    const std::vector<fs::path> inputs = sorted_files(opt.input, ".pfm");
    if (inputs.empty())
        raise(ErrorCode::data_error, "no .pfm frames in " + opt.input);
    fs::create_directories(opt.out);

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const RadianceFrame frame = read_pfm(inputs[i]);
        LdrFrame display;
        if (opt.tonemap == "reinhard") {
            display = reinhard_display(frame);
        } else {
            const double peak = max_radiance(frame);
            const RadianceFrame normalized =
                normalize_radiance(frame, peak > 0.0 ? peak : 1.0);
            display.pixels = mu_law(normalized);
            display.bit_depth = BitDepth::b8;
        }
        const fs::path path =
            fs::path(opt.out) / ("tm_" + zero_padded(static_cast<std::int64_t>(i)) + ".ppm");
        write_pnm(path, display, 255);
        log_progress("exported " + path.string());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"HDR video reconstruction from alternating-exposure LDR sequences"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "Worker thread cap (0 = auto)");
    app.add_flag("-v,--verbose", g_verbose, "Progress logging on stderr");

    SceneOptions scene;
    CLI::App* scene_cmd = app.add_subcommand("scene", "Render a procedural ground-truth scene");
    scene_cmd->add_option("--out", scene.out, "Output directory")->required();
    scene_cmd->add_option("--preset", scene.preset, "Scene preset")
        ->check(CLI::IsMember({"static", "blob", "drift"}));
    scene_cmd->add_option("--frames", scene.frames, "Frame count")->check(CLI::PositiveNumber);
    scene_cmd->add_option("--width", scene.width)->check(CLI::PositiveNumber);
    scene_cmd->add_option("--height", scene.height)->check(CLI::PositiveNumber);
    scene_cmd->add_option("--velocity-x", scene.velocity_x, "Blob velocity (blob preset)");
    scene_cmd->add_option("--velocity-y", scene.velocity_y, "Blob velocity (blob preset)");

    SynthesizeOptions synth;
    CLI::App* synth_cmd =
        app.add_subcommand("synthesize", "Expose HDR frames as an alternating LDR sequence");
    synth_cmd->add_option("--input", synth.input, "Directory of PFM frames")->required();
    synth_cmd->add_option("--out", synth.out, "Output directory")->required();
    synth_cmd->add_option("--base-exposure", synth.base_exposure, "High exposure in seconds")
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--stops", synth.stops, "Stop separation")
        ->check(CLI::IsMember({"1", "2", "3", "random"}));
    synth_cmd->add_option("--bits", synth.bits, "LDR bit depth")
        ->check(CLI::IsMember({"8", "16"}));
    synth_cmd->add_option("--start-tag", synth.start_tag, "Exposure of frame 0")
        ->check(CLI::IsMember({"H", "L"}));
    synth_cmd->add_option("--seed", synth.seed, "Random seed");
    synth_cmd->add_option("--noise-sigma", synth.noise_sigma, "Additive sensor noise (LDR units)")
        ->check(CLI::NonNegativeNumber);

    ReconstructOptions recon;
    CLI::App* recon_cmd =
        app.add_subcommand("reconstruct", "Merge an alternating sequence into HDR frames");
    recon_cmd->add_option("--manifest", recon.manifest, "Input manifest")->required();
    recon_cmd->add_option("--backend", recon.backend, "Interpolation backend")
        ->check(CLI::IsMember({"blend", "flow"}));
    recon_cmd->add_option("--out", recon.out, "Output directory")->required();

    UpscaleOptions upscale;
    CLI::App* upscale_cmd =
        app.add_subcommand("upscale", "Reconstruct and raise the frame rate by a power of two");
    upscale_cmd->add_option("--manifest", upscale.manifest, "Input manifest")->required();
    upscale_cmd->add_option("--factor", upscale.factor, "Frame-rate factor (power of two)")
        ->check([](const std::string& value) -> std::string {
            long v = 0;
            try {
                std::size_t pos = 0;
                v = std::stol(value, &pos);
                if (pos != value.size()) return "factor must be an integer";
            } catch (const std::exception&) {
                return "factor must be an integer";
            }
            return (v > 0 && (v & (v - 1)) == 0) ? "" : "factor must be a power of two";
        });
    upscale_cmd->add_option("--backend", upscale.backend, "Interpolation backend")
        ->check(CLI::IsMember({"blend", "flow"}));
    upscale_cmd->add_option("--out", upscale.out, "Output directory")->required();

    EvaluateOptions eval;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "Score predictions against ground truth");
    eval_cmd->add_option("--pred", eval.pred, "Prediction directory (with manifest.csv)")
        ->required();
    eval_cmd->add_option("--gt", eval.gt, "Ground-truth PFM directory")->required();
    eval_cmd->add_option("--report", eval.report, "CSV report path")->required();
    eval_cmd->add_option("--mask", eval.mask, "Frames included in the summary")
        ->check(CLI::IsMember({"all", "synth"}));

    ExportOptions exp;
    CLI::App* export_cmd = app.add_subcommand("export", "Tonemap HDR frames for display");
    export_cmd->add_option("--input", exp.input, "Directory of PFM frames")->required();
    export_cmd->add_option("--tonemap", exp.tonemap, "Operator")
        ->check(CLI::IsMember({"reinhard", "mulaw"}));
    export_cmd->add_option("--out", exp.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_max_threads(threads);
    try {
        if (scene_cmd->parsed()) return run_scene(scene);
        if (synth_cmd->parsed()) return run_synthesize(synth);
        if (recon_cmd->parsed()) return run_reconstruct(recon);
        if (upscale_cmd->parsed()) return run_upscale(upscale);
        if (eval_cmd->parsed()) return run_evaluate(eval);
        if (export_cmd->parsed()) return run_export(exp);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
