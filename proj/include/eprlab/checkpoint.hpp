#pragma once

// Checkpoint files let an interrupted scan resume and still produce the
// same final report as an uninterrupted run. A checkpoint is a JSON object
// with a versioned header, the cursor, the partial report, and an embedded
// digest over everything else; a digest mismatch or header mismatch makes
// resume fail rather than continue from bad state.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "eprlab/json_io.hpp"
#include "eprlab/scan.hpp"

namespace eprlab {

inline constexpr int kCheckpointFormatVersion = 1;

struct Checkpoint {
    int format_version = kCheckpointFormatVersion;
    int n = 0;
    ScanMode mode = ScanMode::Conjecture;
    PropertySet properties;
    Shard shard;
    BigInt next_mask = 0;
    ScanReport partial;
};

inline Json checkpoint_to_json(const Checkpoint& c) {
    Json j;
    j["format_version"] = c.format_version;
    j["n"] = c.n;
    j["mode"] = scan_mode_name(c.mode);
    j["properties"] = c.properties.names();
    j["shard"] = Json{{"index", c.shard.index}, {"count", c.shard.count}};
    j["mask_cursor"] = c.next_mask.str();
    j["report"] = scan_report_to_json(c.partial);
    j["digest"] = fnv1a64_hex(j.dump());
    return j;
}

inline Checkpoint checkpoint_from_json(Json j) {
    if (!j.contains("digest"))
        throw IoError("checkpoint is missing its digest");
    const std::string stored = j.at("digest").get<std::string>();
    j.erase("digest");
    if (fnv1a64_hex(j.dump()) != stored)
        throw IoError("checkpoint digest mismatch: file is corrupt");

    Checkpoint c;
    c.format_version = j.at("format_version").get<int>();
    if (c.format_version != kCheckpointFormatVersion)
        throw IoError("unsupported checkpoint format version " +
                      std::to_string(c.format_version));
    c.n = j.at("n").get<int>();
    const std::string mode = j.at("mode").get<std::string>();
    c.mode = mode == "conjecture" ? ScanMode::Conjecture : ScanMode::Properties;
    for (const auto& name : j.at("properties")) {
        PropertySet one = PropertySet::parse(name.get<std::string>());
        c.properties.forbidden |= one.forbidden;
        c.properties.dichotomy |= one.dichotomy;
        c.properties.epr2_forms |= one.epr2_forms;
        c.properties.battery |= one.battery;
        c.properties.odd_girth |= one.odd_girth;
    }
    c.shard.index = j.at("shard").at("index").get<int>();
    c.shard.count = j.at("shard").at("count").get<int>();
    c.next_mask = BigInt(j.at("mask_cursor").get<std::string>());
    c.partial = scan_report_from_json(j.at("report"));
    return c;
}

/// Writes atomically: temp file in place, then rename.
inline void checkpoint_save(const Checkpoint& c, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write checkpoint file " + tmp);
        out << checkpoint_to_json(c).dump(2) << "\n";
        if (!out) throw IoError("failed writing checkpoint file " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("failed to move checkpoint into place at " + path);
}

inline Checkpoint checkpoint_resume(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open checkpoint file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const std::exception& e) {
        throw IoError(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    return checkpoint_from_json(std::move(j));
}

/// Runs (or resumes) a single-shard scan with periodic checkpoints.
/// The final report equals the one an uninterrupted run would produce,
/// except for wall-clock fields.
inline ScanReport scan_with_checkpoints(int n, ScanMode mode, PropertySet props,
                                        const Shard& shard, const std::string& path,
                                        std::uint64_t checkpoint_every, bool resume) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [lo, hi] = shard_range(n, shard);
    Scanner scanner(n, mode, props, lo, hi);

    if (resume) {
        Checkpoint c = checkpoint_resume(path);
        if (c.n != n)
            throw PreconditionError("checkpoint order mismatch: file has n=" +
                                    std::to_string(c.n) + ", requested n=" +
                                    std::to_string(n));
        if (c.mode != mode)
            throw PreconditionError("checkpoint mode mismatch");
        if (!(c.shard == shard))
            throw PreconditionError("checkpoint shard mismatch: file has " +
                                    std::to_string(c.shard.index) + "/" +
                                    std::to_string(c.shard.count));
        BigInt cursor = c.next_mask;
        c.partial.resumed_from = cursor;
        scanner.restore(std::move(c.partial), std::move(cursor));
    }

    if (checkpoint_every == 0) checkpoint_every = std::uint64_t(1) << 20;
    while (!scanner.done()) {
        scanner.step(checkpoint_every);
        Checkpoint c;
        c.n = n;
        c.mode = mode;
        c.properties = mode == ScanMode::Properties ? scanner.report().properties
                                                    : PropertySet{};
        c.shard = shard;
        c.next_mask = scanner.cursor();
        c.partial = scanner.report();
        checkpoint_save(c, path);
    }
    ScanReport out = scanner.report();
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace eprlab
