#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dentalmark/error.hpp"
#include "dentalmark/landmark.hpp"

namespace dentalmark {

enum class MapVariant : std::uint8_t {
    RawClamped = 0,  ///< clamped geodesic distances in mm, values in [0, tau]
    Sharpened = 1,   ///< sqrt-transformed and normalized, values in [0, 1]
};

inline const char* map_variant_name(MapVariant v) {
    return v == MapVariant::RawClamped ? "RawClamped" : "Sharpened";
}

/// Per-vertex, per-class scalar field. Vertex-major storage: row = vertex,
/// column = landmark class in the fixed class order. Values are held in
/// double; the on-disk payload is f32.
struct DistanceMap {
    std::size_t vertex_count = 0;
    MapVariant variant = MapVariant::RawClamped;
    double tau = 0.0;
    std::vector<double> values;  ///< vertex_count * kLandmarkClassCount, vertex-major

    static constexpr std::size_t kClassCount = kLandmarkClassCount;

    double& at(std::size_t vertex, std::size_t cls) {
        return values[vertex * kClassCount + cls];
    }
    double at(std::size_t vertex, std::size_t cls) const {
        return values[vertex * kClassCount + cls];
    }
    double& at(std::size_t vertex, LandmarkClass cls) {
        return at(vertex, static_cast<std::size_t>(cls));
    }
    double at(std::size_t vertex, LandmarkClass cls) const {
        return at(vertex, static_cast<std::size_t>(cls));
    }

    std::vector<double> class_column(LandmarkClass cls) const {
        std::vector<double> column(vertex_count);
        const std::size_t c = static_cast<std::size_t>(cls);
        for (std::size_t v = 0; v < vertex_count; ++v) column[v] = at(v, c);
        return column;
    }
};

inline DistanceMap make_distance_map(std::size_t vertex_count, MapVariant variant, double tau) {
    DistanceMap map;
    map.vertex_count = vertex_count;
    map.variant = variant;
    map.tau = tau;
    map.values.assign(vertex_count * DistanceMap::kClassCount, 0.0);
    return map;
}

// ---------------------------------------------------------------------------
// DMAP binary format: magic "DMAP", u8 version=1, u8 variant, u32 LE vertex
// count, u32 LE class count (=6), f32 LE tau, then vertex-major f32 LE values.

namespace detail {

inline void dmap_append_u32le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void dmap_append_f32le(std::string& out, float v) {
    dmap_append_u32le(out, std::bit_cast<std::uint32_t>(v));
}

inline std::uint32_t dmap_read_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline float dmap_read_f32le(const unsigned char* p) {
    return std::bit_cast<float>(dmap_read_u32le(p));
}

}  // namespace detail

inline constexpr char kDmapMagic[4] = {'D', 'M', 'A', 'P'};
inline constexpr std::uint8_t kDmapVersion = 1;

inline void save_distance_map(const DistanceMap& map, const std::filesystem::path& path) {
    std::string out;
    out.reserve(14 + map.values.size() * 4);
    out.append(kDmapMagic, 4);
    out.push_back(static_cast<char>(kDmapVersion));
    out.push_back(static_cast<char>(static_cast<std::uint8_t>(map.variant)));
    detail::dmap_append_u32le(out, static_cast<std::uint32_t>(map.vertex_count));
    detail::dmap_append_u32le(out, static_cast<std::uint32_t>(DistanceMap::kClassCount));
    detail::dmap_append_f32le(out, static_cast<float>(map.tau));
    for (double v : map.values) {
        detail::dmap_append_f32le(out, static_cast<float>(v));
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorCode::WriteFailure, "cannot open " + path.string() + " for writing");
    }
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    file.flush();
    if (!file) {
        throw Error(ErrorCode::WriteFailure, "write failed on " + path.string());
    }
}

inline DistanceMap load_distance_map(const std::filesystem::path& path,
                                     std::size_t expected_vertex_count) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::UnreadableFile, "cannot open " + path.string());
    }
    std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (bytes.size() < 18) {
        throw Error(ErrorCode::TruncatedFile, path.string() + ": shorter than DMAP header");
    }
    const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
    if (std::memcmp(p, kDmapMagic, 4) != 0) {
        throw Error(ErrorCode::BadMagic, path.string() + ": not a DMAP file");
    }
    const std::uint8_t version = p[4];
    if (version != kDmapVersion) {
        throw Error(ErrorCode::VersionMismatch,
                    path.string() + ": DMAP version " + std::to_string(version));
    }
    const std::uint8_t variant_byte = p[5];
    if (variant_byte > 1) {
        throw Error(ErrorCode::VariantMismatch,
                    path.string() + ": unknown variant " + std::to_string(variant_byte));
    }
    const std::uint32_t vertex_count = detail::dmap_read_u32le(p + 6);
    const std::uint32_t class_count = detail::dmap_read_u32le(p + 10);
    if (class_count != DistanceMap::kClassCount) {
        throw Error(ErrorCode::ShapeMismatch,
                    path.string() + ": class count " + std::to_string(class_count) + " != " +
                        std::to_string(DistanceMap::kClassCount));
    }
    if (vertex_count != expected_vertex_count) {
        throw Error(ErrorCode::VertexCountMismatch,
                    path.string() + ": header vertex count " + std::to_string(vertex_count) +
                        ", caller expects " + std::to_string(expected_vertex_count));
    }
    const double tau = static_cast<double>(detail::dmap_read_f32le(p + 14));
    const std::size_t value_count =
        static_cast<std::size_t>(vertex_count) * DistanceMap::kClassCount;
    if (bytes.size() < 18 + value_count * 4) {
        throw Error(ErrorCode::TruncatedFile, path.string() + ": payload truncated");
    }
    DistanceMap map;
    map.vertex_count = vertex_count;
    map.variant = static_cast<MapVariant>(variant_byte);
    map.tau = tau;
    map.values.resize(value_count);
    for (std::size_t i = 0; i < value_count; ++i) {
        map.values[i] = static_cast<double>(detail::dmap_read_f32le(p + 18 + i * 4));
    }
    return map;
}

}  // namespace dentalmark
