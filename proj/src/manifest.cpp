#include "hdrv/manifest.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hdrv {

namespace {

constexpr const char* kHeader = "index,timestamp,filename,exposure_time_s,tag,provenance,level,stops";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

void validate(const Manifest& manifest) {
    std::set<std::string> names;
    std::optional<ExposureTag> prev_real_tag;
    std::int64_t prev_index = -1;
    bool first = true;
    for (const ManifestRecord& r : manifest.records) {
        if (!first && r.index <= prev_index)
            raise(ErrorCode::data_error, "manifest: indices must be strictly increasing");
        first = false;
        prev_index = r.index;
        if (r.filename.empty())
            raise(ErrorCode::data_error, "manifest: empty filename");
        if (r.filename.find(',') != std::string::npos ||
            r.filename.find('\n') != std::string::npos)
            raise(ErrorCode::data_error, "manifest: filename contains a delimiter");
        if (!names.insert(r.filename).second)
            raise(ErrorCode::data_error, "manifest: duplicate filename " + r.filename);
        if (r.provenance.is_real()) {
            if (r.provenance.level.has_value())
                raise(ErrorCode::data_error, "manifest: real frame carries a level");
            if (!r.tag.has_value())
                raise(ErrorCode::data_error, "manifest: real frame without an exposure tag");
            if (prev_real_tag.has_value() && *prev_real_tag == *r.tag)
                raise(ErrorCode::data_error, "manifest: real frame tags do not alternate");
            prev_real_tag = r.tag;
        }
    }
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Manifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::io_error, "cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        raise(ErrorCode::format_error, "manifest: unexpected header row in " + path.string());

    Manifest manifest;
    std::set<std::int64_t> indices;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 8)
            raise(ErrorCode::format_error, "manifest: wrong field count in line: " + line);

        ManifestRecord r;
        try {
            r.index = std::stoll(f[0]);
            r.timestamp = Timestamp::parse(f[1]);
            r.filename = f[2];
            r.exposure_time_s = std::stod(f[3]);
            if (!f[4].empty()) {
                if (f[4] != "H" && f[4] != "L")
                    raise(ErrorCode::format_error, "manifest: bad tag " + f[4]);
                r.tag = f[4] == "H" ? ExposureTag::High : ExposureTag::Low;
            }
            if (f[5] == "real")
                r.provenance = FrameProvenance::real();
            else if (f[5] == "synth")
                r.provenance = FrameProvenance::synthesized(f[6].empty() ? 0 : std::stoi(f[6]));
            else
                raise(ErrorCode::format_error, "manifest: bad provenance " + f[5]);
            if (f[5] == "real" && !f[6].empty())
                raise(ErrorCode::format_error, "manifest: real frame with level: " + line);
            r.stops = std::stoi(f[7]);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            raise(ErrorCode::format_error, "manifest: unparseable line: " + line);
        }
        if (!indices.insert(r.index).second)
            raise(ErrorCode::data_error,
                  "manifest: duplicate index " + std::to_string(r.index));
        manifest.records.push_back(std::move(r));
    }
    validate(manifest);
    return manifest;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
    validate(manifest);
    std::ostringstream out;
    out << kHeader << "\n";
    for (const ManifestRecord& r : manifest.records) {
        out << r.index << ',' << r.timestamp.to_string() << ',' << r.filename << ','
            << format_double(r.exposure_time_s) << ',';
        if (r.tag.has_value()) out << tag_letter(*r.tag);
        out << ',' << (r.provenance.is_real() ? "real" : "synth") << ',';
        if (r.provenance.level.has_value()) out << *r.provenance.level;
        out << ',' << r.stops << "\n";
    }

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        raise(ErrorCode::io_error, "cannot write " + path.string());
    const std::string text = out.str();
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file)
        raise(ErrorCode::io_error, "write failed: " + path.string());
}

} // namespace hdrv
