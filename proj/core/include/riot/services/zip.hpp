#ifndef RIOT_SERVICES_ZIP_HPP
#define RIOT_SERVICES_ZIP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace riot {

struct ZipEntry {
    std::string name;
    std::string bytes;
};

/// Deterministic ZIP container: entries in the given order, fixed DOS
/// timestamps, deflate-compressed. Same inputs always yield the same
/// archive bytes.
std::string zipArchive(const std::vector<ZipEntry>& entries);

/// Lists entry names of an archive produced by zipArchive (used by
/// tests; reads the central directory).
std::vector<std::string> zipEntryNames(const std::string& archive);

enum class ZipDestination { Local, Remote };

struct ZipTarget {
    std::string localDir;
    std::string remoteDir;
    std::int64_t remoteLatencyMs = 20;  // remote writes pay a fixed cost
};

/// Archives the named files to `<destDir>/<archiveName>` and returns the
/// written path. Throws FileMissing / DestinationUnwritable / EmptyBatch.
std::string zipFiles(const std::vector<std::string>& filePaths, const std::string& archiveName,
                     ZipDestination destination, const ZipTarget& target);

}  // namespace riot

#endif
