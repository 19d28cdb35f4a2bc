#ifndef RIOT_SERVICES_BACKENDS_HPP
#define RIOT_SERVICES_BACKENDS_HPP

#include <filesystem>
#include <memory>

#include "riot/services/blob_store.hpp"
#include "riot/services/pubsub.hpp"
#include "riot/services/table_store.hpp"
#include "riot/services/zip.hpp"

namespace riot {

/// The local stand-ins for cloud blob/table/broker services, rooted at
/// one run directory. Concurrent `execute` runs in a process must use
/// disjoint backends.
struct ServiceBackends {
    std::shared_ptr<BlobStore> blob;
    std::shared_ptr<TableStore> table;
    std::shared_ptr<PubSubBroker> broker;
    ZipTarget zipTarget;

    static std::shared_ptr<ServiceBackends> makeLocal(const std::filesystem::path& runDir,
                                                      std::int64_t remoteLatencyMs = 20) {
        auto b = std::make_shared<ServiceBackends>();
        b->blob = std::make_shared<BlobStore>(runDir / "blobs");
        b->table = std::make_shared<TableStore>();
        b->broker = std::make_shared<PubSubBroker>();
        b->zipTarget.localDir = (runDir / "archives").string();
        b->zipTarget.remoteDir = (runDir / "remote" / "archives").string();
        b->zipTarget.remoteLatencyMs = remoteLatencyMs;
        return b;
    }
};

}  // namespace riot

#endif
