#include "riot/report.hpp"

#include <cstdio>
#include <fstream>

#include "riot/errors.hpp"
#include "riot/svg.hpp"

namespace riot {

namespace {

std::string fixed(double v, int digits = 3) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

void writeFile(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Err::IoFailure, "cannot write '" + path.string() + "'");
    out << content;
}

}  // namespace

std::vector<std::string> writeReport(const MetricsReport& report,
                                     const std::filesystem::path& outDir) {
    std::error_code ec;
    std::filesystem::create_directories(outDir, ec);
    if (ec || !std::filesystem::is_directory(outDir))
        raise(Err::IoFailure, "cannot create '" + outDir.string() + "'");

    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& content) {
        writeFile(outDir / name, content);
        written.push_back(name);
    };

    {
        std::string csv = "msgId,causeId,latencyMs\n";
        for (const auto& r : report.latencies)
            csv += std::to_string(r.msgId) + "," + std::to_string(r.causeId) + "," +
                   fixed(r.latencyMs) + "\n";
        emit("latency.csv", csv);
    }
    {
        std::string csv = "intervalStartMs,msgPerSec\n";
        for (std::size_t i = 0; i < report.throughputSeries.size(); ++i)
            csv += std::to_string(i * report.runMeta.intervalMs) + "," +
                   fixed(report.throughputSeries[i]) + "\n";
        emit("throughput.csv", csv);
    }
    {
        std::string csv = "intervalStartMs,J\n";
        for (std::size_t i = 0; i < report.jitterSeries.size(); ++i)
            csv += std::to_string(i * report.runMeta.intervalMs) + "," +
                   fixed(report.jitterSeries[i], 6) + "\n";
        emit("jitter.csv", csv);
    }
    {
        std::string csv = "tsMs,cpuPct,memPct\n";
        for (const auto& s : report.utilizationSamples)
            csv += fixed(s.tMs, 0) + "," + fixed(s.cpuPct, 1) + "," + fixed(s.memPct, 2) + "\n";
        emit("utilization.csv", csv);
    }
    {
        const auto& m = report.runMeta;
        const auto& l = report.latencyStats;
        std::string txt;
        txt += "topology:    " + m.topology + "\n";
        txt += "workload:    " + m.workload + "\n";
        txt += "duration_ms: " + fixed(m.durationMs, 1) + "\n";
        txt += "interval_ms: " + std::to_string(m.intervalMs) + "\n";
        txt += "selectivity: " + fixed(m.selectivity, 4) + "\n";
        txt += "seed:        " + std::to_string(m.seed) + "\n";
        txt += "messages:    " + std::to_string(l.count) + "\n";
        txt += "latency_ms:  min=" + fixed(l.min) + " q1=" + fixed(l.q1) + " median=" +
               fixed(l.median) + " q3=" + fixed(l.q3) + " max=" + fixed(l.max) + "\n";
        if (!report.jitterSeries.empty()) {
            txt += "jitter:      median=" + fixed(quantile(report.jitterSeries, 0.5), 4) +
                   " q1=" + fixed(quantile(report.jitterSeries, 0.25), 4) +
                   " q3=" + fixed(quantile(report.jitterSeries, 0.75), 4) + "\n";
        }
        if (report.partial) txt += "note:        utilization sampler unavailable, report partial\n";
        emit("summary.txt", txt);
    }

    emit("latency_box.svg", svgBoxPlot(report.latencyStats, "end-to-end latency (ms)"));
    {
        SvgSeries thr{"output", {}};
        for (std::size_t i = 0; i < report.throughputSeries.size(); ++i)
            thr.points.emplace_back(static_cast<double>(i * report.runMeta.intervalMs) / 1000.0,
                                    report.throughputSeries[i]);
        SvgSeries in{"input", {}};
        for (std::size_t i = 0; i < report.inputRateSeries.size(); ++i)
            in.points.emplace_back(static_cast<double>(i * report.runMeta.intervalMs) / 1000.0,
                                   report.inputRateSeries[i]);
        emit("throughput.svg", svgLineChart({thr, in}, "throughput", "time (s)", "msg/sec"));
    }
    {
        SvgSeries j{"jitter", {}};
        for (std::size_t i = 0; i < report.jitterSeries.size(); ++i)
            j.points.emplace_back(static_cast<double>(i * report.runMeta.intervalMs) / 1000.0,
                                  report.jitterSeries[i]);
        emit("jitter.svg", svgLineChart({j}, "jitter", "time (s)", "J"));
    }
    if (!report.utilizationSamples.empty()) {
        SvgSeries cpu{"cpuPct", {}}, mem{"memPct", {}};
        for (const auto& s : report.utilizationSamples) {
            cpu.points.emplace_back(s.tMs / 1000.0, s.cpuPct);
            mem.points.emplace_back(s.tMs / 1000.0, s.memPct);
        }
        emit("utilization.svg", svgLineChart({cpu, mem}, "utilization", "time (s)", "%"));
    }
    return written;
}

}  // namespace riot
