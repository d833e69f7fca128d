#include "hdrv/pfm.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace hdrv {

namespace {

constexpr bool host_little_endian() { return std::endian::native == std::endian::little; }

float byteswap_float(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    bits = ((bits & 0x000000ffu) << 24) | ((bits & 0x0000ff00u) << 8) |
           ((bits & 0x00ff0000u) >> 8) | ((bits & 0xff000000u) >> 24);
    std::memcpy(&v, &bits, sizeof(bits));
    return v;
}

// Reads one whitespace-delimited token; PFM headers use single-character
// separators.
std::string read_token(std::istream& in) {
    std::string token;
    char c;
    while (in.get(c)) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
            if (!token.empty()) break;
        } else {
            token.push_back(c);
        }
    }
    return token;
}

} // namespace

RadianceFrame read_pfm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::io_error, "cannot open " + path.string());

    const std::string magic = read_token(in);
    if (magic == "Pf")
        raise(ErrorCode::format_error, "grayscale PFM is not supported: " + path.string());
    if (magic != "PF")
        raise(ErrorCode::format_error, "not a PFM file: " + path.string());

    int width = 0, height = 0;
    double scale = 0.0;
    try {
        width = std::stoi(read_token(in));
        height = std::stoi(read_token(in));
        scale = std::stod(read_token(in));
    } catch (const std::exception&) {
        raise(ErrorCode::format_error, "malformed PFM header: " + path.string());
    }
    if (width <= 0 || height <= 0 || scale == 0.0)
        raise(ErrorCode::format_error, "malformed PFM header: " + path.string());

    const bool file_little = scale < 0.0;
    RadianceFrame frame;
    frame.pixels = PixelBuffer(width, height);
    const std::size_t row_floats = static_cast<std::size_t>(width) * 3;
    std::vector<float> row(row_floats);

    // Payload rows run bottom-to-top.
    for (int y = height - 1; y >= 0; --y) {
        in.read(reinterpret_cast<char*>(row.data()),
                static_cast<std::streamsize>(row_floats * sizeof(float)));
        if (!in)
            raise(ErrorCode::format_error, "truncated PFM payload: " + path.string());
        float* dst = frame.pixels.row(y);
        if (file_little == host_little_endian()) {
            std::memcpy(dst, row.data(), row_floats * sizeof(float));
        } else {
            for (std::size_t i = 0; i < row_floats; ++i) dst[i] = byteswap_float(row[i]);
        }
    }
    validate_radiance(frame);
    return frame;
}

void write_pfm(const std::filesystem::path& path, const RadianceFrame& frame) {
    validate_radiance(frame);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(ErrorCode::io_error, "cannot write " + path.string());

    out << "PF\n" << frame.pixels.width << " " << frame.pixels.height << "\n-1.0\n";

    const std::size_t row_floats = static_cast<std::size_t>(frame.pixels.width) * 3;
    std::vector<float> row(row_floats);
    for (int y = frame.pixels.height - 1; y >= 0; --y) {
        const float* src = frame.pixels.row(y);
        if (host_little_endian()) {
            out.write(reinterpret_cast<const char*>(src),
                      static_cast<std::streamsize>(row_floats * sizeof(float)));
        } else {
            for (std::size_t i = 0; i < row_floats; ++i) row[i] = byteswap_float(src[i]);
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row_floats * sizeof(float)));
        }
    }
    if (!out)
        raise(ErrorCode::io_error, "write failed: " + path.string());
}

} // namespace hdrv
