#include "riot/services/zip.hpp"

#include <zlib.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "riot/errors.hpp"

namespace riot {

namespace {

void putU16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void putU32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t readU32(const std::string& s, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(s[off + i]);
    return v;
}

std::uint16_t readU16(const std::string& s, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<std::uint8_t>(s[off]) |
                                      (static_cast<std::uint8_t>(s[off + 1]) << 8));
}

std::string deflateRaw(const std::string& data) {
    z_stream zs{};
    // Negative window bits: raw deflate stream, as ZIP requires.
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK)
        raise(Err::IoFailure, "deflateInit2 failed");
    std::string out;
    out.resize(deflateBound(&zs, static_cast<uLong>(data.size())));
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = deflate(&zs, Z_FINISH);
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) raise(Err::IoFailure, "deflate failed");
    out.resize(out.size() - zs.avail_out);
    return out;
}

constexpr std::uint16_t kDosTime = 0;       // 00:00:00
constexpr std::uint16_t kDosDate = 0x0021;  // 1980-01-01

}  // namespace

std::string zipArchive(const std::vector<ZipEntry>& entries) {
    if (entries.empty()) raise(Err::EmptyBatch, "zip archive needs at least one entry");
    std::string out;
    std::string central;
    for (const auto& e : entries) {
        const std::uint32_t crc = static_cast<std::uint32_t>(
            crc32(0L, reinterpret_cast<const Bytef*>(e.bytes.data()),
                  static_cast<uInt>(e.bytes.size())));
        std::string packed = deflateRaw(e.bytes);
        std::uint16_t method = 8;
        if (packed.size() >= e.bytes.size()) {  // store incompressible data
            packed = e.bytes;
            method = 0;
        }
        const auto offset = static_cast<std::uint32_t>(out.size());

        putU32(out, 0x04034b50);  // local file header
        putU16(out, 20);
        putU16(out, 0);
        putU16(out, method);
        putU16(out, kDosTime);
        putU16(out, kDosDate);
        putU32(out, crc);
        putU32(out, static_cast<std::uint32_t>(packed.size()));
        putU32(out, static_cast<std::uint32_t>(e.bytes.size()));
        putU16(out, static_cast<std::uint16_t>(e.name.size()));
        putU16(out, 0);
        out += e.name;
        out += packed;

        putU32(central, 0x02014b50);  // central directory record
        putU16(central, 20);
        putU16(central, 20);
        putU16(central, 0);
        putU16(central, method);
        putU16(central, kDosTime);
        putU16(central, kDosDate);
        putU32(central, crc);
        putU32(central, static_cast<std::uint32_t>(packed.size()));
        putU32(central, static_cast<std::uint32_t>(e.bytes.size()));
        putU16(central, static_cast<std::uint16_t>(e.name.size()));
        putU16(central, 0);
        putU16(central, 0);
        putU16(central, 0);
        putU16(central, 0);
        putU32(central, 0);
        putU32(central, offset);
        central += e.name;
    }
    const auto centralOffset = static_cast<std::uint32_t>(out.size());
    out += central;
    putU32(out, 0x06054b50);  // end of central directory
    putU16(out, 0);
    putU16(out, 0);
    putU16(out, static_cast<std::uint16_t>(entries.size()));
    putU16(out, static_cast<std::uint16_t>(entries.size()));
    putU32(out, static_cast<std::uint32_t>(central.size()));
    putU32(out, centralOffset);
    putU16(out, 0);
    return out;
}

std::vector<std::string> zipEntryNames(const std::string& archive) {
    std::vector<std::string> names;
    if (archive.size() < 22) return names;
    std::size_t eocd = archive.size() - 22;
    if (readU32(archive, eocd) != 0x06054b50) return names;
    std::uint16_t count = readU16(archive, eocd + 10);
    std::size_t pos = readU32(archive, eocd + 16);
    for (int i = 0; i < count; ++i) {
        if (readU32(archive, pos) != 0x02014b50) break;
        std::uint16_t nameLen = readU16(archive, pos + 28);
        std::uint16_t extraLen = readU16(archive, pos + 30);
        std::uint16_t commentLen = readU16(archive, pos + 32);
        names.push_back(archive.substr(pos + 46, nameLen));
        pos += 46 + nameLen + extraLen + commentLen;
    }
    return names;
}

std::string zipFiles(const std::vector<std::string>& filePaths, const std::string& archiveName,
                     ZipDestination destination, const ZipTarget& target) {
    if (filePaths.empty()) raise(Err::EmptyBatch, "no files to archive");
    std::vector<ZipEntry> entries;
    for (const auto& p : filePaths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) raise(Err::FileMissing, "'" + p + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        entries.push_back({std::filesystem::path(p).filename().string(), buf.str()});
    }
    const std::string archive = zipArchive(entries);

    const std::string& dir =
        destination == ZipDestination::Local ? target.localDir : target.remoteDir;
    if (destination == ZipDestination::Remote && target.remoteLatencyMs > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(target.remoteLatencyMs));
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string dest = (std::filesystem::path(dir) / archiveName).string();
    std::ofstream out(dest, std::ios::binary | std::ios::trunc);
    if (!out) raise(Err::DestinationUnwritable, "'" + dest + "'");
    out.write(archive.data(), static_cast<std::streamsize>(archive.size()));
    return dest;
}

}  // namespace riot
