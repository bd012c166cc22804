#include "eit/scan.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

#include "eit/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace eit {

std::vector<double> GridAxis::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    if (scale == GridScale::Linear) {
        const double step = (hi - lo) / (n - 1);
        for (int i = 0; i < n; ++i) v[i] = lo + step * i;
    } else {
        const double llo = std::log(lo), lhi = std::log(hi);
        const double step = (lhi - llo) / (n - 1);
        for (int i = 0; i < n; ++i) v[i] = std::exp(llo + step * i);
    }
    v.front() = lo;  // land exactly on both endpoints
    v.back() = hi;
    return v;
}

void GridAxis::validate() const {
    std::vector<std::string> bad;
    if (name.empty()) bad.push_back("grid axis has no name");
    if (n < 1) bad.push_back("grid needs at least one point");
    if (n > 1 && !(hi > lo)) bad.push_back("grid bounds not strictly increasing");
    if (scale == GridScale::Log && !(lo > 0.0))
        bad.push_back("log grid requires positive bounds");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        bad.push_back("grid bounds not finite");
    if (!bad.empty()) throw ConfigError(bad);
}

GridAxis GridAxis::parse(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = spec.find(':', start);
        parts.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() != 5)
        throw ConfigError("grid spec must be <name>:<lo>:<hi>:<n>:<log|lin>");
    GridAxis axis;
    axis.name = parts[0];
    try {
        axis.lo = std::stod(parts[1]);
        axis.hi = std::stod(parts[2]);
        axis.n = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("grid spec has non-numeric bounds or count");
    }
    if (parts[4] == "log")
        axis.scale = GridScale::Log;
    else if (parts[4] == "lin")
        axis.scale = GridScale::Linear;
    else
        throw ConfigError("grid scale must be 'log' or 'lin'");
    axis.validate();
    return axis;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string metadata_string(const SpectralScan& s) {
    std::string m;
    for (const auto& [k, v] : s.metadata) m += k + "=" + v + ";";
    return m;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xF];
        h >>= 4;
    }
    return std::string(buf, 16);
}

}  // namespace

std::string SpectralScan::to_csv() const {
    std::string out;
    out += "# config_hash=" + hash_hex(fnv1a(metadata_string(*this))) + "\n";
    for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";

    const auto v1 = axis1.values();
    if (two_dimensional()) {
        const auto v2 = axis2.values();
        out += axis1.name + "," + axis2.name + "," + quantity + ",valid\n";
        for (int i = 0; i < axis1.n; ++i)
            for (int j = 0; j < axis2.n; ++j) {
                out += format_double(v1[i]) + "," + format_double(v2[j]) + "," +
                       format_double(at(i, j)) + "," +
                       (valid_at(i, j) ? "1" : "0") + "\n";
            }
    } else {
        out += axis1.name + "," + quantity + ",valid\n";
        for (int i = 0; i < axis1.n; ++i)
            out += format_double(v1[i]) + "," + format_double(at(i)) + "," +
                   (valid_at(i) ? "1" : "0") + "\n";
    }
    return out;
}

std::string SpectralScan::to_json() const {
    // Hand-rolled for deterministic key order and float formatting.
    auto axis_json = [](const GridAxis& a) {
        std::string s = "{\"name\":\"" + a.name + "\",\"lo\":" +
                        format_double(a.lo) + ",\"hi\":" + format_double(a.hi) +
                        ",\"n\":" + std::to_string(a.n) + ",\"scale\":\"" +
                        (a.scale == GridScale::Log ? "log" : "lin") + "\"}";
        return s;
    };
    std::string out = "{\"quantity\":\"" + quantity + "\",";
    out += "\"config_hash\":\"" + hash_hex(fnv1a(metadata_string(*this))) + "\",";
    out += "\"metadata\":{";
    for (std::size_t i = 0; i < metadata.size(); ++i) {
        if (i) out += ",";
        out += "\"" + metadata[i].first + "\":\"" + metadata[i].second + "\"";
    }
    out += "},\"axis1\":" + axis_json(axis1);
    if (two_dimensional()) out += ",\"axis2\":" + axis_json(axis2);
    out += ",\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::isfinite(values[i]) ? format_double(values[i]) : "null";
    }
    out += "],\"valid\":[";
    for (std::size_t i = 0; i < valid.size(); ++i) {
        if (i) out += ",";
        out += valid[i] ? "true" : "false";
    }
    out += "]}";
    return out;
}

void for_each_index(std::size_t n, ExecutionPolicy policy,
                    const std::function<void(std::size_t)>& fn) {
    if (policy == ExecutionPolicy::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace eit
