#include "riot/senml.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "riot/errors.hpp"

namespace riot {

using nlohmann::json;

std::vector<SenmlEntry> parseSenml(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        raise(Err::MalformedSenml, e.what());
    }
    if (!doc.is_array()) raise(Err::MalformedSenml, "top-level value is not an array");

    std::vector<SenmlEntry> out;
    std::string baseName;
    double baseTimeSec = 0;
    for (const auto& rec : doc) {
        if (!rec.is_object()) raise(Err::MalformedSenml, "entry is not an object");
        if (rec.contains("bn")) baseName = rec["bn"].get<std::string>();
        if (rec.contains("bt")) baseTimeSec = rec["bt"].get<double>();
        SenmlEntry e;
        e.baseName = baseName;
        e.name = rec.value("n", std::string{});
        double tSec = baseTimeSec + rec.value("t", 0.0);
        e.timeMs = static_cast<std::int64_t>(std::llround(tSec * 1000.0));
        if (rec.contains("v")) {
            if (!rec["v"].is_number()) raise(Err::MalformedSenml, "'v' is not numeric");
            e.numeric = true;
            e.value = rec["v"].get<double>();
        } else if (rec.contains("vs")) {
            e.numeric = false;
            e.stringValue = rec["vs"].get<std::string>();
        } else {
            raise(Err::MalformedSenml, "entry '" + e.name + "' carries neither 'v' nor 'vs'");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string encodeSenmlRecord(const std::string& baseName, std::int64_t baseTimeMs,
                              const std::vector<SenmlEntry>& entries) {
    json arr = json::array();
    bool first = true;
    for (const auto& e : entries) {
        json rec;
        if (first) {
            rec["bn"] = baseName;
            rec["bt"] = static_cast<double>(baseTimeMs) / 1000.0;
            first = false;
        }
        rec["n"] = e.name;
        if (e.timeMs != baseTimeMs) rec["t"] = static_cast<double>(e.timeMs - baseTimeMs) / 1000.0;
        if (e.numeric)
            rec["v"] = e.value;
        else
            rec["vs"] = e.stringValue;
        arr.push_back(std::move(rec));
    }
    return arr.dump();
}

}  // namespace riot
