#ifndef RIOT_SERVICES_TABLE_STORE_HPP
#define RIOT_SERVICES_TABLE_STORE_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "riot/message.hpp"

namespace riot {

struct TableRow {
    std::string partitionKey;
    std::string rowKey;
    std::vector<Field> attributes;
};

/// Sorted in-memory key-value table with (partitionKey, rowKey) primary
/// keys. Insert upserts; range scans return rows in key order. The
/// snapshot file is line-delimited JSON.
class TableStore {
public:
    void insert(TableRow row);
    TableRow lookup(const std::string& pk, const std::string& rk) const;  // throws RowNotFound
    std::vector<TableRow> range(const std::string& pk, const std::string& fromRk,
                                const std::string& toRk) const;  // inclusive bounds
    /// Full scan in key order; the deliberately O(N) path.
    std::vector<TableRow> scan() const;
    std::size_t size() const;

    void snapshot(const std::string& path) const;
    void load(const std::string& path);

private:
    using Key = std::pair<std::string, std::string>;
    mutable std::mutex mu_;
    std::map<Key, std::vector<Field>> rows_;
};

}  // namespace riot

#endif
