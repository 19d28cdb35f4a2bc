#ifndef RIOT_SENML_HPP
#define RIOT_SENML_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace riot {

/// One resolved SenML entry: base attributes already applied, time in
/// milliseconds.
struct SenmlEntry {
    std::string baseName;
    std::string name;
    std::int64_t timeMs = 0;
    bool numeric = true;
    double value = 0;
    std::string stringValue;
};

/// Parses a SenML-JSON array (records with base name `bn`, base time
/// `bt`, per-entry `n`, `t`, `v`/`vs`). Bases stick to later entries per
/// the SenML resolution rules. Throws MalformedSenml.
std::vector<SenmlEntry> parseSenml(const std::string& json);

/// Serializes one multi-observation record: bn/bt on the first entry and
/// one entry per observation. Times are seconds in the serialized form.
std::string encodeSenmlRecord(const std::string& baseName, std::int64_t baseTimeMs,
                              const std::vector<SenmlEntry>& entries);

}  // namespace riot

#endif
