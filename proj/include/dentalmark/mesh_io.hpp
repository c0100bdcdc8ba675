#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dentalmark/error.hpp"
#include "dentalmark/mesh.hpp"

namespace dentalmark {

enum class MeshFormat { Obj, Ply, Stl, Auto };

namespace detail {

inline std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::UnreadableFile, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::UnreadableFile, "read failed on " + path.string());
    }
    return std::move(buf).str();
}

inline std::uint16_t read_u16le(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline std::uint32_t read_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline float read_f32le(const unsigned char* p) {
    return std::bit_cast<float>(read_u32le(p));
}

inline void append_u16le(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

inline void append_u32le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void append_f32le(std::string& out, float v) {
    append_u32le(out, std::bit_cast<std::uint32_t>(v));
}

inline void write_file_bytes(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::WriteFailure, "cannot open " + path.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw Error(ErrorCode::WriteFailure, "write failed on " + path.string());
    }
}

inline std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// OBJ

inline TriangleMesh parse_obj(const std::string& text) {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) {
                throw Error(ErrorCode::MalformedGeometry,
                            "OBJ line " + std::to_string(line_no) + ": bad vertex");
            }
            vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<long long> idx;
            std::string token;
            while (ls >> token) {
                // "i", "i/t", "i//n", "i/t/n" -- only the vertex index matters
                const std::size_t slash = token.find('/');
                const std::string head = slash == std::string::npos ? token : token.substr(0, slash);
                long long i = 0;
                try {
                    i = std::stoll(head);
                } catch (const std::exception&) {
                    throw Error(ErrorCode::MalformedGeometry,
                                "OBJ line " + std::to_string(line_no) + ": bad face index '" +
                                    token + "'");
                }
                if (i < 0) i = static_cast<long long>(vertices.size()) + i + 1;  // relative
                if (i < 1) {
                    throw Error(ErrorCode::MalformedGeometry,
                                "OBJ line " + std::to_string(line_no) + ": face index < 1");
                }
                idx.push_back(i - 1);
            }
            if (idx.size() < 3) {
                throw Error(ErrorCode::MalformedGeometry,
                            "OBJ line " + std::to_string(line_no) + ": face with <3 vertices");
            }
            for (std::size_t k = 1; k + 1 < idx.size(); ++k) {  // fan triangulation
                faces.push_back(Face{static_cast<VertexIndex>(idx[0]),
                                     static_cast<VertexIndex>(idx[k]),
                                     static_cast<VertexIndex>(idx[k + 1])});
            }
        }
        // all other tags (vn, vt, comments, groups, ...) are ignored
    }
    return build_mesh(std::move(vertices), std::move(faces));
}

inline std::string serialize_obj(const TriangleMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertex_count() * 32 + mesh.face_count() * 24);
    for (const Vec3& v : mesh.vertices) {
        out += "v ";
        out += format_g9(v.x);
        out += ' ';
        out += format_g9(v.y);
        out += ' ';
        out += format_g9(v.z);
        out += '\n';
    }
    for (const Face& f : mesh.faces) {
        out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' +
               std::to_string(f[2] + 1) + '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// PLY

struct PlyProperty {
    bool is_list = false;
    std::string count_type;
    std::string value_type;
    std::string name;
};

struct PlyElement {
    std::string name;
    std::size_t count = 0;
    std::vector<PlyProperty> properties;
};

inline std::size_t ply_type_size(const std::string& t) {
    if (t == "char" || t == "int8" || t == "uchar" || t == "uint8") return 1;
    if (t == "short" || t == "int16" || t == "ushort" || t == "uint16") return 2;
    if (t == "int" || t == "int32" || t == "uint" || t == "uint32" || t == "float" ||
        t == "float32")
        return 4;
    if (t == "double" || t == "float64") return 8;
    throw Error(ErrorCode::UnsupportedFormat, "unknown PLY type '" + t + "'");
}

inline double ply_read_binary_value(const unsigned char* p, const std::string& t) {
    if (t == "char" || t == "int8") return static_cast<double>(static_cast<signed char>(p[0]));
    if (t == "uchar" || t == "uint8") return static_cast<double>(p[0]);
    if (t == "short" || t == "int16") return static_cast<double>(static_cast<std::int16_t>(read_u16le(p)));
    if (t == "ushort" || t == "uint16") return static_cast<double>(read_u16le(p));
    if (t == "int" || t == "int32") return static_cast<double>(static_cast<std::int32_t>(read_u32le(p)));
    if (t == "uint" || t == "uint32") return static_cast<double>(read_u32le(p));
    if (t == "float" || t == "float32") return static_cast<double>(read_f32le(p));
    if (t == "double" || t == "float64") {
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        return std::bit_cast<double>(bits);
    }
    throw Error(ErrorCode::UnsupportedFormat, "unknown PLY type '" + t + "'");
}

inline TriangleMesh parse_ply(const std::string& bytes) {
    // Header is ASCII lines up to "end_header" regardless of body encoding.
    std::size_t pos = 0;
    auto next_line = [&]() -> std::string {
        std::size_t end = bytes.find('\n', pos);
        if (end == std::string::npos) {
            throw Error(ErrorCode::MalformedGeometry, "PLY: unterminated header");
        }
        std::string line = bytes.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        pos = end + 1;
        return line;
    };

    if (next_line() != "ply") {
        throw Error(ErrorCode::MalformedGeometry, "PLY: missing magic");
    }
    bool binary = false;
    std::vector<PlyElement> elements;
    for (;;) {
        const std::string line = next_line();
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "comment" || tag == "obj_info" || tag.empty()) continue;
        if (tag == "format") {
            std::string fmt, version;
            ls >> fmt >> version;
            if (fmt == "ascii") {
                binary = false;
            } else if (fmt == "binary_little_endian") {
                binary = true;
            } else {
                throw Error(ErrorCode::UnsupportedFormat, "PLY format '" + fmt + "'");
            }
        } else if (tag == "element") {
            PlyElement el;
            ls >> el.name >> el.count;
            elements.push_back(el);
        } else if (tag == "property") {
            if (elements.empty()) {
                throw Error(ErrorCode::MalformedGeometry, "PLY: property before element");
            }
            PlyProperty prop;
            std::string first;
            ls >> first;
            if (first == "list") {
                prop.is_list = true;
                ls >> prop.count_type >> prop.value_type >> prop.name;
            } else {
                prop.value_type = first;
                ls >> prop.name;
            }
            elements.back().properties.push_back(prop);
        } else if (tag == "end_header") {
            break;
        } else {
            throw Error(ErrorCode::MalformedGeometry, "PLY: unexpected header line '" + line + "'");
        }
    }

    std::vector<Vec3> vertices;
    std::vector<Face> faces;

    auto parse_ascii_body = [&]() {
        std::istringstream body(bytes.substr(pos));
        for (const PlyElement& el : elements) {
            const bool is_vertex = el.name == "vertex";
            const bool is_face = el.name == "face";
            for (std::size_t row = 0; row < el.count; ++row) {
                Vec3 v;
                std::vector<long long> face_idx;
                for (const PlyProperty& prop : el.properties) {
                    if (prop.is_list) {
                        long long n = 0;
                        if (!(body >> n) || n < 0) {
                            throw Error(ErrorCode::MalformedGeometry, "PLY: bad list count");
                        }
                        for (long long k = 0; k < n; ++k) {
                            long long value = 0;
                            if (!(body >> value)) {
                                throw Error(ErrorCode::MalformedGeometry, "PLY: truncated list");
                            }
                            if (is_face && (prop.name == "vertex_indices" || prop.name == "vertex_index")) {
                                face_idx.push_back(value);
                            }
                        }
                    } else {
                        double value = 0;
                        if (!(body >> value)) {
                            throw Error(ErrorCode::MalformedGeometry, "PLY: truncated body");
                        }
                        if (is_vertex) {
                            if (prop.name == "x") v.x = value;
                            else if (prop.name == "y") v.y = value;
                            else if (prop.name == "z") v.z = value;
                        }
                    }
                }
                if (is_vertex) vertices.push_back(v);
                if (is_face && !face_idx.empty()) {
                    if (face_idx.size() < 3) {
                        throw Error(ErrorCode::MalformedGeometry, "PLY: face with <3 vertices");
                    }
                    for (std::size_t k = 1; k + 1 < face_idx.size(); ++k) {
                        faces.push_back(Face{static_cast<VertexIndex>(face_idx[0]),
                                             static_cast<VertexIndex>(face_idx[k]),
                                             static_cast<VertexIndex>(face_idx[k + 1])});
                    }
                }
            }
        }
    };

    auto parse_binary_body = [&]() {
        const unsigned char* data = reinterpret_cast<const unsigned char*>(bytes.data());
        std::size_t offset = pos;
        auto need = [&](std::size_t n) {
            if (offset + n > bytes.size()) {
                throw Error(ErrorCode::MalformedGeometry, "PLY: truncated binary body");
            }
        };
        for (const PlyElement& el : elements) {
            const bool is_vertex = el.name == "vertex";
            const bool is_face = el.name == "face";
            for (std::size_t row = 0; row < el.count; ++row) {
                Vec3 v;
                std::vector<long long> face_idx;
                for (const PlyProperty& prop : el.properties) {
                    if (prop.is_list) {
                        const std::size_t csize = ply_type_size(prop.count_type);
                        need(csize);
                        const long long n =
                            static_cast<long long>(ply_read_binary_value(data + offset, prop.count_type));
                        offset += csize;
                        const std::size_t vsize = ply_type_size(prop.value_type);
                        for (long long k = 0; k < n; ++k) {
                            need(vsize);
                            const double value = ply_read_binary_value(data + offset, prop.value_type);
                            offset += vsize;
                            if (is_face && (prop.name == "vertex_indices" || prop.name == "vertex_index")) {
                                face_idx.push_back(static_cast<long long>(value));
                            }
                        }
                    } else {
                        const std::size_t vsize = ply_type_size(prop.value_type);
                        need(vsize);
                        const double value = ply_read_binary_value(data + offset, prop.value_type);
                        offset += vsize;
                        if (is_vertex) {
                            if (prop.name == "x") v.x = value;
                            else if (prop.name == "y") v.y = value;
                            else if (prop.name == "z") v.z = value;
                        }
                    }
                }
                if (is_vertex) vertices.push_back(v);
                if (is_face && !face_idx.empty()) {
                    if (face_idx.size() < 3) {
                        throw Error(ErrorCode::MalformedGeometry, "PLY: face with <3 vertices");
                    }
                    for (std::size_t k = 1; k + 1 < face_idx.size(); ++k) {
                        faces.push_back(Face{static_cast<VertexIndex>(face_idx[0]),
                                             static_cast<VertexIndex>(face_idx[k]),
                                             static_cast<VertexIndex>(face_idx[k + 1])});
                    }
                }
            }
        }
    };

    if (binary) {
        parse_binary_body();
    } else {
        parse_ascii_body();
    }
    return build_mesh(std::move(vertices), std::move(faces));
}

inline std::string serialize_ply_ascii(const TriangleMesh& mesh,
                                       const std::vector<std::array<std::uint8_t, 3>>* colors) {
    std::string out;
    out += "ply\nformat ascii 1.0\n";
    out += "element vertex " + std::to_string(mesh.vertex_count()) + "\n";
    out += "property float x\nproperty float y\nproperty float z\n";
    if (colors != nullptr) {
        out += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    }
    out += "element face " + std::to_string(mesh.face_count()) + "\n";
    out += "property list uchar int vertex_indices\n";
    out += "end_header\n";
    for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
        const Vec3& v = mesh.vertices[i];
        out += format_g9(v.x);
        out += ' ';
        out += format_g9(v.y);
        out += ' ';
        out += format_g9(v.z);
        if (colors != nullptr) {
            const auto& c = (*colors)[i];
            out += ' ' + std::to_string(c[0]) + ' ' + std::to_string(c[1]) + ' ' +
                   std::to_string(c[2]);
        }
        out += '\n';
    }
    for (const Face& f : mesh.faces) {
        out += "3 " + std::to_string(f[0]) + ' ' + std::to_string(f[1]) + ' ' +
               std::to_string(f[2]) + '\n';
    }
    return out;
}

inline std::string serialize_ply_binary(const TriangleMesh& mesh) {
    std::string out;
    out += "ply\nformat binary_little_endian 1.0\n";
    out += "element vertex " + std::to_string(mesh.vertex_count()) + "\n";
    out += "property float x\nproperty float y\nproperty float z\n";
    out += "element face " + std::to_string(mesh.face_count()) + "\n";
    out += "property list uchar int vertex_indices\n";
    out += "end_header\n";
    for (const Vec3& v : mesh.vertices) {
        append_f32le(out, static_cast<float>(v.x));
        append_f32le(out, static_cast<float>(v.y));
        append_f32le(out, static_cast<float>(v.z));
    }
    for (const Face& f : mesh.faces) {
        out.push_back(static_cast<char>(3));
        for (VertexIndex idx : f) append_u32le(out, idx);
    }
    return out;
}

// ---------------------------------------------------------------------------
// STL

/// Exact-bit vertex key; scan exports repeat shared coordinates exactly, so
/// dedup by bit equality recovers connectivity deterministically.
using StlVertexKey = std::array<std::uint32_t, 3>;

inline StlVertexKey stl_key(float x, float y, float z) {
    return {std::bit_cast<std::uint32_t>(x), std::bit_cast<std::uint32_t>(y),
            std::bit_cast<std::uint32_t>(z)};
}

inline TriangleMesh mesh_from_stl_triangles(const std::vector<std::array<float, 9>>& tris) {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::map<StlVertexKey, VertexIndex> index_of;
    faces.reserve(tris.size());
    for (const auto& t : tris) {
        Face f{};
        for (int corner = 0; corner < 3; ++corner) {
            const float x = t[corner * 3 + 0];
            const float y = t[corner * 3 + 1];
            const float z = t[corner * 3 + 2];
            const StlVertexKey key = stl_key(x, y, z);
            auto [it, inserted] = index_of.try_emplace(key, static_cast<VertexIndex>(vertices.size()));
            if (inserted) {
                vertices.push_back(Vec3{static_cast<double>(x), static_cast<double>(y),
                                        static_cast<double>(z)});
            }
            f[corner] = it->second;
        }
        faces.push_back(f);
    }
    return build_mesh(std::move(vertices), std::move(faces));
}

inline TriangleMesh parse_stl_binary(const std::string& bytes) {
    if (bytes.size() < 84) {
        throw Error(ErrorCode::MalformedGeometry, "binary STL shorter than header");
    }
    const unsigned char* data = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::uint32_t count = read_u32le(data + 80);
    const std::size_t expected = 84 + static_cast<std::size_t>(count) * 50;
    if (bytes.size() < expected) {
        throw Error(ErrorCode::MalformedGeometry, "binary STL truncated");
    }
    std::vector<std::array<float, 9>> tris(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        const unsigned char* rec = data + 84 + static_cast<std::size_t>(i) * 50;
        // 12 bytes facet normal skipped, then 3 vertices
        for (int k = 0; k < 9; ++k) {
            tris[i][k] = read_f32le(rec + 12 + k * 4);
        }
    }
    return mesh_from_stl_triangles(tris);
}

inline TriangleMesh parse_stl_ascii(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::array<float, 9>> tris;
    std::array<float, 9> current{};
    int corner = 0;
    std::string token;
    while (in >> token) {
        if (token == "vertex") {
            float x, y, z;
            if (!(in >> x >> y >> z)) {
                throw Error(ErrorCode::MalformedGeometry, "ASCII STL: bad vertex");
            }
            if (corner >= 3) {
                throw Error(ErrorCode::MalformedGeometry, "ASCII STL: >3 vertices in facet");
            }
            current[corner * 3 + 0] = x;
            current[corner * 3 + 1] = y;
            current[corner * 3 + 2] = z;
            ++corner;
        } else if (token == "endloop") {
            if (corner != 3) {
                throw Error(ErrorCode::MalformedGeometry, "ASCII STL: facet with <3 vertices");
            }
            tris.push_back(current);
            corner = 0;
        }
    }
    return mesh_from_stl_triangles(tris);
}

inline std::string serialize_stl_binary(const TriangleMesh& mesh) {
    std::string out(80, '\0');
    const char* tag = "dentalmark binary STL";
    std::memcpy(out.data(), tag, std::strlen(tag));
    append_u32le(out, static_cast<std::uint32_t>(mesh.face_count()));
    for (const Face& f : mesh.faces) {
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        const Vec3 n = normalized(cross(b - a, c - a));
        append_f32le(out, static_cast<float>(n.x));
        append_f32le(out, static_cast<float>(n.y));
        append_f32le(out, static_cast<float>(n.z));
        for (const Vec3* v : {&a, &b, &c}) {
            append_f32le(out, static_cast<float>(v->x));
            append_f32le(out, static_cast<float>(v->y));
            append_f32le(out, static_cast<float>(v->z));
        }
        append_u16le(out, 0);
    }
    return out;
}

inline std::string serialize_stl_ascii(const TriangleMesh& mesh) {
    std::string out = "solid dentalmark\n";
    for (const Face& f : mesh.faces) {
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        const Vec3 n = normalized(cross(b - a, c - a));
        out += "  facet normal " + format_g9(n.x) + ' ' + format_g9(n.y) + ' ' + format_g9(n.z) +
               "\n    outer loop\n";
        for (const Vec3* v : {&a, &b, &c}) {
            out += "      vertex " + format_g9(v->x) + ' ' + format_g9(v->y) + ' ' +
                   format_g9(v->z) + '\n';
        }
        out += "    endloop\n  endfacet\n";
    }
    out += "endsolid dentalmark\n";
    return out;
}

inline bool stl_looks_ascii(const std::string& bytes) {
    if (bytes.rfind("solid", 0) != 0) return false;
    // binary STL may also begin with "solid"; a consistent triangle count
    // settles it
    if (bytes.size() >= 84) {
        const unsigned char* data = reinterpret_cast<const unsigned char*>(bytes.data());
        const std::uint32_t count = read_u32le(data + 80);
        if (bytes.size() == 84 + static_cast<std::size_t>(count) * 50) return false;
    }
    return bytes.find("facet") != std::string::npos || bytes.find("endsolid") != std::string::npos;
}

inline MeshFormat format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (ext == ".obj") return MeshFormat::Obj;
    if (ext == ".ply") return MeshFormat::Ply;
    if (ext == ".stl") return MeshFormat::Stl;
    return MeshFormat::Auto;
}

inline MeshFormat sniff_format(const std::string& bytes) {
    if (bytes.rfind("ply", 0) == 0) return MeshFormat::Ply;
    if (bytes.rfind("solid", 0) == 0 && stl_looks_ascii(bytes)) return MeshFormat::Stl;
    if (bytes.size() >= 84) {
        const unsigned char* data = reinterpret_cast<const unsigned char*>(bytes.data());
        const std::uint32_t count = read_u32le(data + 80);
        if (bytes.size() == 84 + static_cast<std::size_t>(count) * 50) return MeshFormat::Stl;
    }
    for (std::size_t i = 0; i + 1 < bytes.size(); ++i) {
        if (bytes[i] == 'v' && (bytes[i + 1] == ' ' || bytes[i + 1] == '\t') &&
            (i == 0 || bytes[i - 1] == '\n')) {
            return MeshFormat::Obj;
        }
    }
    return MeshFormat::Auto;
}

}  // namespace detail

/// Loads OBJ / PLY (ascii, binary LE) / STL (ascii, binary). With
/// MeshFormat::Auto the format is taken from the extension, falling back to
/// content sniffing. STL input deduplicates bit-identical vertices to recover
/// connectivity.
inline TriangleMesh load_mesh(const std::filesystem::path& path,
                              MeshFormat format = MeshFormat::Auto) {
    const std::string bytes = detail::read_file_bytes(path);
    if (format == MeshFormat::Auto) {
        format = detail::format_from_extension(path);
        if (format == MeshFormat::Auto) format = detail::sniff_format(bytes);
        if (format == MeshFormat::Auto) {
            throw Error(ErrorCode::UnsupportedFormat,
                        "cannot determine mesh format of " + path.string());
        }
    }
    switch (format) {
        case MeshFormat::Obj:
            return detail::parse_obj(bytes);
        case MeshFormat::Ply:
            return detail::parse_ply(bytes);
        case MeshFormat::Stl:
            return detail::stl_looks_ascii(bytes) ? detail::parse_stl_ascii(bytes)
                                                  : detail::parse_stl_binary(bytes);
        case MeshFormat::Auto:
            break;
    }
    throw Error(ErrorCode::UnsupportedFormat, "unsupported mesh format");
}

/// ASCII PLY / ASCII STL encodings are selectable for test fixtures; defaults
/// are ASCII PLY and binary STL.
inline void save_mesh(const TriangleMesh& mesh, const std::filesystem::path& path,
                      MeshFormat format = MeshFormat::Auto) {
    if (format == MeshFormat::Auto) {
        format = detail::format_from_extension(path);
        if (format == MeshFormat::Auto) {
            throw Error(ErrorCode::UnsupportedFormat,
                        "cannot determine mesh format of " + path.string());
        }
    }
    switch (format) {
        case MeshFormat::Obj:
            detail::write_file_bytes(path, detail::serialize_obj(mesh));
            return;
        case MeshFormat::Ply:
            detail::write_file_bytes(path, detail::serialize_ply_ascii(mesh, nullptr));
            return;
        case MeshFormat::Stl:
            detail::write_file_bytes(path, detail::serialize_stl_binary(mesh));
            return;
        case MeshFormat::Auto:
            break;
    }
    throw Error(ErrorCode::UnsupportedFormat, "unsupported mesh format");
}

inline void save_mesh_ply_binary(const TriangleMesh& mesh, const std::filesystem::path& path) {
    detail::write_file_bytes(path, detail::serialize_ply_binary(mesh));
}

inline void save_mesh_stl_ascii(const TriangleMesh& mesh, const std::filesystem::path& path) {
    detail::write_file_bytes(path, detail::serialize_stl_ascii(mesh));
}

/// ASCII PLY with per-vertex uchar red/green/blue.
inline void save_colored_ply(const TriangleMesh& mesh,
                             const std::vector<std::array<std::uint8_t, 3>>& colors,
                             const std::filesystem::path& path) {
    if (colors.size() != mesh.vertex_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "color count " + std::to_string(colors.size()) + " != vertex count " +
                        std::to_string(mesh.vertex_count()));
    }
    detail::write_file_bytes(path, detail::serialize_ply_ascii(mesh, &colors));
}

/// Linear blue-to-red colormap over [min, max] of the scalar field.
/// A constant field maps to the midpoint color (128, 0, 128).
inline std::array<std::uint8_t, 3> heatmap_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const auto channel = [](double x) {
        return static_cast<std::uint8_t>(std::lround(255.0 * x));
    };
    return {channel(t), 0, channel(1.0 - t)};
}

inline void save_heatmap_ply(const TriangleMesh& mesh, const std::vector<double>& scalar,
                             const std::filesystem::path& path) {
    if (scalar.size() != mesh.vertex_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "scalar count " + std::to_string(scalar.size()) + " != vertex count " +
                        std::to_string(mesh.vertex_count()));
    }
    double lo = 0.0, hi = 0.0;
    if (!scalar.empty()) {
        lo = *std::min_element(scalar.begin(), scalar.end());
        hi = *std::max_element(scalar.begin(), scalar.end());
    }
    std::vector<std::array<std::uint8_t, 3>> colors(scalar.size());
    for (std::size_t i = 0; i < scalar.size(); ++i) {
        const double t = hi > lo ? (scalar[i] - lo) / (hi - lo) : 0.5;
        colors[i] = heatmap_color(t);
    }
    detail::write_file_bytes(path, detail::serialize_ply_ascii(mesh, &colors));
}

}  // namespace dentalmark
