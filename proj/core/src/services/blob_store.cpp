#include "riot/services/blob_store.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "riot/errors.hpp"
#include "riot/stable_hash.hpp"

namespace riot {

namespace {

// Blob names may contain separators or metacharacters; flatten to a safe
// file name and disambiguate with a short stable hash.
std::string safeFileName(const std::string& name) {
    std::string flat;
    for (char c : name)
        flat.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ? c : '_');
    char suffix[20];
    std::snprintf(suffix, sizeof(suffix), "_%08llx",
                  static_cast<unsigned long long>(hashKey(name) & 0xffffffffull));
    return flat + suffix;
}

}  // namespace

BlobStore::BlobStore(std::filesystem::path root, std::int64_t latencyMs)
    : root_(std::move(root)), latencyMs_(latencyMs) {
    std::filesystem::create_directories(root_);
}

std::filesystem::path BlobStore::pathFor(const std::string& name) const {
    return root_ / safeFileName(name);
}

void BlobStore::simulateLatency() const {
    if (latencyMs_ > 0) std::this_thread::sleep_for(std::chrono::milliseconds(latencyMs_));
}

void BlobStore::put(const std::string& name, const std::string& bytes) {
    if (name.empty()) raise(Err::BadConfig, "blob name must be non-empty");
    simulateLatency();
    std::lock_guard lock(mu_);
    std::ofstream out(pathFor(name), std::ios::binary | std::ios::trunc);
    if (!out) raise(Err::IoFailure, "cannot write blob '" + name + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string BlobStore::get(const std::string& name) const {
    simulateLatency();
    std::lock_guard lock(mu_);
    std::ifstream in(pathFor(name), std::ios::binary);
    if (!in) raise(Err::BlobNotFound, "'" + name + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool BlobStore::exists(const std::string& name) const {
    std::lock_guard lock(mu_);
    return std::filesystem::exists(pathFor(name));
}

std::vector<std::string> BlobStore::list() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(root_))
        names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace riot
