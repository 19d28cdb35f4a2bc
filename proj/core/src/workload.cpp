#include "riot/workload.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "riot/errors.hpp"
#include "riot/senml.hpp"

namespace riot {

namespace {

std::vector<std::string> splitLine(const std::string& line, char delim) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

bool parseDouble(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && ptr == e && !s.empty();
}

bool parseIsoTimestamp(const std::string& s, std::int64_t& outMs) {
    std::tm tm{};
    double frac = 0;
    int y, mo, d, h, mi;
    double sec;
    char sep;
    if (std::sscanf(s.c_str(), "%d-%d-%d%c%d:%d:%lf", &y, &mo, &d, &sep, &h, &mi, &sec) != 7)
        return false;
    if (sep != ' ' && sep != 'T') return false;
    tm.tm_year = y - 1900;
    tm.tm_mon = mo - 1;
    tm.tm_mday = d;
    tm.tm_hour = h;
    tm.tm_min = mi;
    tm.tm_sec = static_cast<int>(sec);
    frac = sec - tm.tm_sec;
    std::time_t t = timegm(&tm);
    if (t == static_cast<std::time_t>(-1)) return false;
    outMs = static_cast<std::int64_t>(t) * 1000 + static_cast<std::int64_t>(std::llround(frac * 1000));
    return true;
}

bool parseTimestamp(const std::string& cell, const std::string& unit, std::int64_t& outMs) {
    if (unit == "iso") return parseIsoTimestamp(cell, outMs);
    double v;
    if (parseDouble(cell, v)) {
        if (unit == "s")
            outMs = static_cast<std::int64_t>(std::llround(v * 1000.0));
        else if (unit == "ms")
            outMs = static_cast<std::int64_t>(std::llround(v));
        else  // auto: large magnitudes are epoch seconds written fractionally
            outMs = (std::floor(v) != v && v < 1e11)
                        ? static_cast<std::int64_t>(std::llround(v * 1000.0))
                        : static_cast<std::int64_t>(std::llround(v));
        return true;
    }
    if (unit == "auto") return parseIsoTimestamp(cell, outMs);
    return false;
}

}  // namespace

void StreamWorkload::finalize() {
    std::stable_sort(records.begin(), records.end(),
                     [](const Message& a, const Message& b) { return a.timestampMs < b.timestampMs; });
    std::set<std::string> ids;
    for (const auto& m : records) ids.insert(m.sensorId);
    sensorCount = ids.size();
    if (records.empty()) {
        nativeSpanMs = 0;
        ratePerSecond.clear();
        return;
    }
    const std::int64_t t0 = records.front().timestampMs;
    nativeSpanMs = records.back().timestampMs - t0;
    ratePerSecond.assign(static_cast<std::size_t>(nativeSpanMs / 1000) + 1, 0);
    for (const auto& m : records) ratePerSecond[static_cast<std::size_t>((m.timestampMs - t0) / 1000)]++;
}

StreamWorkload ingestCsv(const std::string& path, const SchemaMap& schema) {
    std::ifstream in(path);
    if (!in) raise(Err::EmptyFile, "cannot open '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) raise(Err::EmptyFile, "'" + path + "' is empty");

    auto columns = splitLine(header, schema.delimiter);
    auto colIndex = [&](const std::string& name) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return static_cast<int>(i);
        return -1;
    };

    const int idCol = colIndex(schema.sensorIdColumn);
    const int tsCol = colIndex(schema.timestampColumn);
    if (idCol < 0)
        raise(Err::SchemaMismatch, "column '" + schema.sensorIdColumn + "' not in '" + path + "'");
    if (tsCol < 0)
        raise(Err::SchemaMismatch, "column '" + schema.timestampColumn + "' not in '" + path + "'");
    std::vector<std::pair<std::string, int>> obsCols;
    for (const auto& name : schema.observationColumns) {
        int c = colIndex(name);
        if (c < 0) raise(Err::SchemaMismatch, "column '" + name + "' not in '" + path + "'");
        obsCols.emplace_back(name, c);
    }

    StreamWorkload w;
    w.name = path;
    std::string line;
    std::uint64_t nextId = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = splitLine(line, schema.delimiter);
        if (cells.size() < columns.size()) {
            w.droppedRows++;
            continue;
        }
        std::int64_t ts;
        if (!parseTimestamp(cells[tsCol], schema.timestampUnit, ts)) {
            w.droppedRows++;
            continue;
        }
        Message m;
        m.sensorId = cells[idCol];
        m.timestampMs = ts;
        for (const auto& [name, col] : obsCols) {
            const std::string& cell = cells[col];
            if (cell.empty()) continue;  // gap: left for interpolation downstream
            double v;
            if (parseDouble(cell, v))
                m.fields.push_back({name, v});
            else
                m.fields.push_back({name, cell});
        }
        if (m.fields.empty()) {
            w.droppedRows++;
            continue;
        }
        m.id = nextId++;
        w.records.push_back(std::move(m));
    }
    if (w.records.empty()) raise(Err::EmptyFile, "'" + path + "' has no parseable rows");
    w.finalize();
    return w;
}

StreamWorkload ingestSenml(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::EmptyFile, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto entries = parseSenml(buf.str());
    if (entries.empty()) raise(Err::EmptyFile, "'" + path + "' has no entries");

    StreamWorkload w;
    w.name = path;
    std::uint64_t nextId = 1;
    for (const auto& e : entries) {
        Message m;
        m.sensorId = e.baseName.empty() ? e.name : e.baseName;
        m.timestampMs = e.timeMs;
        if (e.numeric)
            m.fields.push_back({e.name.empty() ? "value" : e.name, e.value});
        else
            m.fields.push_back({e.name.empty() ? "value" : e.name, e.stringValue});
        m.id = nextId++;
        w.records.push_back(std::move(m));
    }
    w.finalize();
    return w;
}

StreamWorkload ingest(const std::string& path, const SchemaMap& schema) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".json" || ext == ".senml") return ingestSenml(path);
    return ingestCsv(path, schema);
}

StreamWorkload scaleTemporal(const StreamWorkload& w, double factor) {
    if (factor < 1.0) raise(Err::BadConfig, "temporal factor must be >= 1");
    StreamWorkload out = w;
    out.name = w.name + "@T" + std::to_string(factor);
    if (out.records.empty() || factor == 1.0) return out;
    const std::int64_t t0 = w.records.front().timestampMs;
    for (auto& m : out.records)
        m.timestampMs = t0 + static_cast<std::int64_t>(std::llround((m.timestampMs - t0) / factor));
    out.finalize();
    return out;
}

StreamWorkload scaleSpatial(const StreamWorkload& w, int factor, std::int64_t windowMs) {
    if (factor < 1) raise(Err::BadConfig, "spatial factor must be >= 1");
    if (windowMs <= 0) raise(Err::BadConfig, "spatial window must be positive");
    StreamWorkload out = w;
    out.name = w.name + "@S" + std::to_string(factor);
    if (factor == 1 || w.records.empty()) return out;

    const std::int64_t t0 = w.records.front().timestampMs;
    const std::int64_t spanWindows = (w.nativeSpanMs / windowMs) + 1;
    if (spanWindows < factor)
        raise(Err::InsufficientSpan, "trace spans " + std::to_string(spanWindows) +
                                         " windows, spatial factor is " + std::to_string(factor));

    for (auto& m : out.records) {
        const std::int64_t w0 = (m.timestampMs - t0) / windowMs;
        const std::int64_t slot = w0 % factor;  // windows beyond `factor` fold back
        m.sensorId = m.sensorId + "~" + std::to_string(slot);
        m.timestampMs -= w0 * windowMs;
    }
    out.finalize();
    return out;
}

StreamWorkload applyScaling(const StreamWorkload& w, const ScalingSpec& scaling) {
    StreamWorkload out = w;
    if (scaling.spatial > 1) out = scaleSpatial(out, scaling.spatial, scaling.spatialWindowMs);
    if (scaling.temporal > 1.0) out = scaleTemporal(out, scaling.temporal);
    return out;
}

ReplayRunStats replay(const StreamWorkload& w,
                      const std::function<void(const Message&)>& emitCallback,
                      const ReplayOptions& options) {
    using Clock = std::chrono::steady_clock;
    ReplayRunStats stats;
    if (w.records.empty()) return stats;

    const double factor = options.temporalFactor;
    if (factor < 1.0) raise(Err::BadConfig, "online temporal factor must be >= 1");
    const std::int64_t t0 =
        options.anchorMs >= 0 ? options.anchorMs : w.records.front().timestampMs;
    const double scaledSpanMs = w.nativeSpanMs / factor;
    stats.intendedRate = scaledSpanMs > 0
                             ? static_cast<double>(w.records.size()) / (scaledSpanMs / 1000.0)
                             : static_cast<double>(w.records.size()) * 1000.0;

    const auto start = Clock::now();
    for (const auto& m : w.records) {
        const double offsetMs = (m.timestampMs - t0) / factor;
        const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double, std::milli>(offsetMs));
        // Chunked sleep so an early-stop request is honored promptly.
        while (Clock::now() < deadline) {
            if (options.stop && options.stop()) {
                stats.spanMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
                stats.achievedRate =
                    stats.spanMs > 0 ? stats.emitted / (stats.spanMs / 1000.0) : 0;
                return stats;
            }
            const auto remaining = deadline - Clock::now();
            std::this_thread::sleep_for(
                std::min(remaining, Clock::duration(std::chrono::milliseconds(20))));
        }
        if (options.stop && options.stop()) break;
        const double lateMs =
            std::chrono::duration<double, std::milli>(Clock::now() - deadline).count();
        if (lateMs > options.overrunToleranceMs) stats.clockOverruns++;
        emitCallback(m);
        stats.emitted++;
    }
    stats.spanMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    stats.achievedRate = stats.spanMs > 0 ? stats.emitted / (stats.spanMs / 1000.0) : 0;
    return stats;
}

Distribution distributionFromName(const std::string& name) {
    std::string n;
    for (char c : name) n.push_back(static_cast<char>(std::tolower(c)));
    if (n == "uniform") return Distribution::Uniform;
    if (n == "sawtooth" || n == "saw") return Distribution::SawTooth;
    if (n == "normal") return Distribution::Normal;
    if (n == "bimodal") return Distribution::Bimodal;
    if (n == "burst") return Distribution::Burst;
    raise(Err::BadConfig, "unknown distribution '" + name + "'");
}

const char* distributionName(Distribution d) {
    switch (d) {
        case Distribution::Uniform: return "uniform";
        case Distribution::SawTooth: return "sawtooth";
        case Distribution::Normal: return "normal";
        case Distribution::Bimodal: return "bimodal";
        case Distribution::Burst: return "burst";
    }
    return "?";
}

StreamWorkload synthesize(Distribution distribution, double peakRate, std::int64_t durationMs,
                          int sensorCount, std::uint64_t seed,
                          const std::vector<std::string>& fieldNames) {
    if (peakRate <= 0) raise(Err::BadConfig, "peak rate must be positive");
    if (durationMs <= 0) raise(Err::BadConfig, "duration must be positive");
    if (sensorCount < 1) sensorCount = 1;

    const std::int64_t seconds = (durationMs + 999) / 1000;
    std::vector<double> rate(static_cast<std::size_t>(seconds), 0.0);
    const double mid = (seconds - 1) / 2.0;
    for (std::int64_t s = 0; s < seconds; ++s) {
        double r = 0;
        switch (distribution) {
            case Distribution::Uniform:
                r = peakRate;
                break;
            case Distribution::SawTooth: {
                const std::int64_t period = std::max<std::int64_t>(2, seconds / 4);
                r = peakRate * static_cast<double>((s % period) + 1) / static_cast<double>(period);
                break;
            }
            case Distribution::Normal: {
                const double sd = std::max(1.0, seconds / 6.0);
                r = peakRate * std::exp(-0.5 * (s - mid) * (s - mid) / (sd * sd));
                break;
            }
            case Distribution::Bimodal: {
                const double sd = std::max(1.0, seconds / 10.0);
                const double m1 = (seconds - 1) * 0.25, m2 = (seconds - 1) * 0.75;
                const double g1 = 0.6 * peakRate * std::exp(-0.5 * (s - m1) * (s - m1) / (sd * sd));
                const double g2 = peakRate * std::exp(-0.5 * (s - m2) * (s - m2) / (sd * sd));
                r = std::max(g1, g2);
                break;
            }
            case Distribution::Burst: {
                const std::int64_t period = std::max<std::int64_t>(4, seconds / 5);
                r = (s % period == period / 2) ? peakRate : 0.1 * peakRate;
                break;
            }
        }
        rate[static_cast<std::size_t>(s)] = r;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    StreamWorkload w;
    w.name = std::string(distributionName(distribution)) + ":" + std::to_string(peakRate);
    std::uint64_t nextId = 1;
    for (std::int64_t s = 0; s < seconds; ++s) {
        const std::int64_t n = std::llround(rate[static_cast<std::size_t>(s)]);
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t ts = s * 1000 + i * 1000 / n;
            if (ts >= durationMs) break;
            Message m;
            m.id = nextId++;
            m.sensorId = "sensor_" + std::to_string(nextId % sensorCount);
            m.timestampMs = ts;
            for (const auto& f : fieldNames) m.fields.push_back({f, value(rng)});
            w.records.push_back(std::move(m));
        }
    }
    w.finalize();
    return w;
}

std::vector<double> normalizedRateShape(const StreamWorkload& w, int buckets) {
    std::vector<double> shape;
    if (w.records.empty() || buckets <= 0) return shape;
    shape.assign(static_cast<std::size_t>(buckets), 0.0);
    const std::int64_t t0 = w.records.front().timestampMs;
    const std::int64_t span = std::max<std::int64_t>(1, w.nativeSpanMs);
    for (const auto& m : w.records) {
        auto b = static_cast<std::size_t>((m.timestampMs - t0) * buckets / (span + 1));
        shape[std::min(shape.size() - 1, b)] += 1.0;
    }
    for (auto& v : shape) v /= static_cast<double>(w.records.size());
    return shape;
}

double ksDistance(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = std::max(a.size(), b.size());
    double ca = 0, cb = 0, worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ca += i < a.size() ? a[i] : 0;
        cb += i < b.size() ? b[i] : 0;
        worst = std::max(worst, std::abs(ca - cb));
    }
    return worst;
}

}  // namespace riot
