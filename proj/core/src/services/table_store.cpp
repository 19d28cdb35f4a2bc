#include "riot/services/table_store.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "riot/errors.hpp"

namespace riot {

using nlohmann::json;

namespace {

json fieldsToJson(const std::vector<Field>& fields) {
    json obj = json::object();
    for (const auto& f : fields) {
        if (const double* d = std::get_if<double>(&f.value))
            obj[f.name] = *d;
        else
            obj[f.name] = std::get<std::string>(f.value);
    }
    return obj;
}

std::vector<Field> fieldsFromJson(const json& obj) {
    std::vector<Field> fields;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.value().is_number())
            fields.push_back({it.key(), it.value().get<double>()});
        else
            fields.push_back({it.key(), it.value().get<std::string>()});
    }
    return fields;
}

}  // namespace

void TableStore::insert(TableRow row) {
    if (row.partitionKey.empty() || row.rowKey.empty())
        raise(Err::BadConfig, "table keys must be non-empty");
    std::lock_guard lock(mu_);
    rows_[{row.partitionKey, row.rowKey}] = std::move(row.attributes);
}

TableRow TableStore::lookup(const std::string& pk, const std::string& rk) const {
    std::lock_guard lock(mu_);
    auto it = rows_.find({pk, rk});
    if (it == rows_.end()) raise(Err::RowNotFound, pk + "/" + rk);
    return {pk, rk, it->second};
}

std::vector<TableRow> TableStore::range(const std::string& pk, const std::string& fromRk,
                                        const std::string& toRk) const {
    std::lock_guard lock(mu_);
    std::vector<TableRow> out;
    auto it = rows_.lower_bound({pk, fromRk});
    for (; it != rows_.end() && it->first.first == pk && it->first.second <= toRk; ++it)
        out.push_back({it->first.first, it->first.second, it->second});
    return out;
}

std::vector<TableRow> TableStore::scan() const {
    std::lock_guard lock(mu_);
    std::vector<TableRow> out;
    out.reserve(rows_.size());
    for (const auto& [key, attrs] : rows_) out.push_back({key.first, key.second, attrs});
    return out;
}

std::size_t TableStore::size() const {
    std::lock_guard lock(mu_);
    return rows_.size();
}

void TableStore::snapshot(const std::string& path) const {
    std::lock_guard lock(mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) raise(Err::IoFailure, "cannot write snapshot '" + path + "'");
    for (const auto& [key, attrs] : rows_) {
        json line;
        line["pk"] = key.first;
        line["rk"] = key.second;
        line["attrs"] = fieldsToJson(attrs);
        out << line.dump() << '\n';
    }
}

void TableStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::IoFailure, "cannot read snapshot '" + path + "'");
    std::lock_guard lock(mu_);
    rows_.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        rows_[{rec["pk"].get<std::string>(), rec["rk"].get<std::string>()}] =
            fieldsFromJson(rec["attrs"]);
    }
}

}  // namespace riot
