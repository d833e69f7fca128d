#include "hdrv/pnm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace hdrv {

namespace {

// Netpbm header token: whitespace separated, '#' starts a comment.
std::string read_token(std::istream& in) {
    std::string token;
    char c;
    while (in.get(c)) {
        if (c == '#') {
            while (in.get(c) && c != '\n') {
            }
            continue;
        }
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(c);
    }
    return token;
}

} // namespace

LdrFrame read_pnm(const std::filesystem::path& path, double exposure_time, ExposureTag tag) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::io_error, "cannot open " + path.string());

    if (read_token(in) != "P6")
        raise(ErrorCode::format_error, "not a binary PPM file: " + path.string());
    int width = 0, height = 0, maxval = 0;
    try {
        width = std::stoi(read_token(in));
        height = std::stoi(read_token(in));
        maxval = std::stoi(read_token(in));
    } catch (const std::exception&) {
        raise(ErrorCode::format_error, "malformed PPM header: " + path.string());
    }
    if (width <= 0 || height <= 0)
        raise(ErrorCode::format_error, "malformed PPM header: " + path.string());
    if (maxval != 255 && maxval != 65535)
        raise(ErrorCode::format_error,
              "unsupported PPM maxval " + std::to_string(maxval) + ": " + path.string());

    LdrFrame frame;
    frame.pixels = PixelBuffer(width, height);
    frame.exposure_time = exposure_time;
    frame.tag = tag;
    frame.bit_depth = maxval == 255 ? BitDepth::b8 : BitDepth::b16;

    const std::size_t samples = frame.pixels.sample_count();
    const std::size_t bytes_per_sample = maxval == 255 ? 1 : 2;
    std::vector<std::uint8_t> raw(samples * bytes_per_sample);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!in)
        raise(ErrorCode::format_error, "truncated PPM payload: " + path.string());

    const double inv_max = 1.0 / maxval;
    for (std::size_t i = 0; i < samples; ++i) {
        std::uint32_t v;
        if (bytes_per_sample == 1)
            v = raw[i];
        else
            v = (static_cast<std::uint32_t>(raw[2 * i]) << 8) | raw[2 * i + 1];
        frame.pixels.data[i] = static_cast<float>(v * inv_max);
    }
    return frame;
}

void write_pnm(const std::filesystem::path& path, const LdrFrame& frame, int maxval) {
    if (maxval != 255 && maxval != 65535)
        raise(ErrorCode::invalid_parameter, "PPM maxval must be 255 or 65535");
    validate_ldr(frame);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(ErrorCode::io_error, "cannot write " + path.string());
    out << "P6\n" << frame.pixels.width << " " << frame.pixels.height << "\n" << maxval << "\n";

    const std::size_t samples = frame.pixels.sample_count();
    const std::size_t bytes_per_sample = maxval == 255 ? 1 : 2;
    std::vector<std::uint8_t> raw(samples * bytes_per_sample);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::uint32_t v = static_cast<std::uint32_t>(
            std::floor(static_cast<double>(frame.pixels.data[i]) * maxval + 0.5));
        if (bytes_per_sample == 1) {
            raw[i] = static_cast<std::uint8_t>(v);
        } else {
            raw[2 * i] = static_cast<std::uint8_t>(v >> 8);
            raw[2 * i + 1] = static_cast<std::uint8_t>(v & 0xff);
        }
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out)
        raise(ErrorCode::io_error, "write failed: " + path.string());
}

} // namespace hdrv
