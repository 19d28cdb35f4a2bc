#ifndef RIOT_SERVICES_BLOB_STORE_HPP
#define RIOT_SERVICES_BLOB_STORE_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

namespace riot {

/// Directory-backed blob store: put-then-get returns identical bytes,
/// durable for the lifetime of the run directory. `latencyMs` injects a
/// fixed per-operation delay for remote-service simulation.
class BlobStore {
public:
    explicit BlobStore(std::filesystem::path root, std::int64_t latencyMs = 0);

    void put(const std::string& name, const std::string& bytes);
    std::string get(const std::string& name) const;  // throws BlobNotFound
    bool exists(const std::string& name) const;
    std::vector<std::string> list() const;

    const std::filesystem::path& root() const { return root_; }

private:
    std::filesystem::path pathFor(const std::string& name) const;
    void simulateLatency() const;

    std::filesystem::path root_;
    std::int64_t latencyMs_;
    mutable std::mutex mu_;
};

}  // namespace riot

#endif
