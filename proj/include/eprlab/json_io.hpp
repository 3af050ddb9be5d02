#pragma once

// JSON shapes for reports, verdicts and checkpoints. Field names are part
// of the stable interface; masks and other big integers serialize as
// decimal strings so they survive any JSON number precision.

#include <string>

#include <json.hpp>

#include "eprlab/equimodular.hpp"
#include "eprlab/scan.hpp"

namespace eprlab {

using Json = nlohmann::json;

inline Json to_json(const EquimodularReport& r) {
    Json j;
    j["nonsingular"] = r.nonsingular;
    j["equimodular"] = r.equimodular;
    j["alpha"] = r.alpha ? Json(r.alpha->str()) : Json(nullptr);
    j["constant_diagonal"] =
        r.constant_diagonal ? Json(*r.constant_diagonal) : Json(nullptr);
    return j;
}

inline Json to_json(const ConditionBattery& bat) {
    Json arr = Json::array();
    for (const auto& r : bat.results) {
        Json item;
        item["condition"] = r.condition;
        item["verdict"] = verdict_name(r.verdict);
        item["detail"] = r.detail;
        arr.push_back(std::move(item));
    }
    return arr;
}

inline Json to_json(const ConjectureVerdict& v) {
    Json j;
    j["ends_naa"] = v.ends_naa;
    j["inverse_equimodular_constant_diagonal"] = v.inverse_equimodular_constant_diagonal;
    j["agree"] = v.agree;
    j["tail"] = v.tail;
    return j;
}

inline Json to_json(const DichotomyResult& d) {
    Json j;
    j["tail"] = d.tail5;
    j["class"] = tail_class_name(d.tail_class);
    j["detail"] = d.detail;
    return j;
}

inline Json scan_report_to_json(const ScanReport& r) {
    Json j;
    j["version"] = r.version;
    j["n"] = r.n;
    j["mode"] = scan_mode_name(r.mode);
    if (r.mode == ScanMode::Properties) j["properties"] = r.properties.names();
    j["range"] = Json{{"lo", r.range_lo.str()}, {"hi", r.range_hi.str()}};
    j["total_examined"] = r.total_examined;
    Json counts = Json::object();
    for (const auto& [key, value] : r.counts) counts[key] = value;
    j["counts"] = std::move(counts);
    Json cx = Json::array();
    for (const auto& c : r.counterexamples)
        cx.push_back(Json{{"mask", c.mask.str()}, {"detail", c.detail}});
    j["counterexamples"] = std::move(cx);
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["resumed_from"] = r.resumed_from ? Json(r.resumed_from->str()) : Json(nullptr);
    return j;
}

inline ScanReport scan_report_from_json(const Json& j) {
    ScanReport r;
    r.version = j.at("version").get<std::string>();
    r.n = j.at("n").get<int>();
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "conjecture")
        r.mode = ScanMode::Conjecture;
    else if (mode == "properties")
        r.mode = ScanMode::Properties;
    else
        throw ParseError("unknown scan mode '" + mode + "'", 0);
    if (j.contains("properties"))
        for (const auto& name : j.at("properties")) {
            const std::string s = name.get<std::string>();
            PropertySet one = PropertySet::parse(s);
            r.properties.forbidden |= one.forbidden;
            r.properties.dichotomy |= one.dichotomy;
            r.properties.epr2_forms |= one.epr2_forms;
            r.properties.battery |= one.battery;
            r.properties.odd_girth |= one.odd_girth;
        }
    r.range_lo = BigInt(j.at("range").at("lo").get<std::string>());
    r.range_hi = BigInt(j.at("range").at("hi").get<std::string>());
    r.total_examined = j.at("total_examined").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("counts").items())
        r.counts[key] = value.get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples"))
        r.counterexamples.push_back(
            {BigInt(c.at("mask").get<std::string>()), c.at("detail").get<std::string>()});
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    if (j.contains("resumed_from") && !j.at("resumed_from").is_null())
        r.resumed_from = BigInt(j.at("resumed_from").get<std::string>());
    return r;
}

/// FNV-1a over the bytes of a string; used as a corruption check on
/// checkpoint files.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace eprlab
