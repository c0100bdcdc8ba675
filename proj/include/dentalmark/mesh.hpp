#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dentalmark/error.hpp"
#include "dentalmark/vec3.hpp"

namespace dentalmark {

using VertexIndex = std::uint32_t;
using Face = std::array<VertexIndex, 3>;

/// Triangle mesh: vertices (mm), faces, derived per-vertex adjacency.
/// Immutable after construction by convention; `normals` stays empty until
/// computed. No manifoldness requirements are imposed, only index validity
/// and face non-degeneracy.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::vector<std::vector<VertexIndex>> adjacency;  ///< sorted unique neighbors
    std::vector<Vec3> normals;                        ///< empty until computed

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

/// Adjacency from the face list: sorted unique neighbor indices per vertex.
/// Deterministic and independent of face ordering.
inline std::vector<std::vector<VertexIndex>> build_adjacency(
    std::size_t vertex_count, const std::vector<Face>& faces) {
    std::vector<std::vector<VertexIndex>> adj(vertex_count);
    for (const Face& f : faces) {
        for (int e = 0; e < 3; ++e) {
            const VertexIndex a = f[e];
            const VertexIndex b = f[(e + 1) % 3];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    return adj;
}

/// Validates indices and face degeneracy, then assembles the mesh with
/// derived adjacency. Vertex order is preserved.
inline TriangleMesh build_mesh(std::vector<Vec3> vertices, std::vector<Face> faces) {
    const std::size_t n = vertices.size();
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const Face& f = faces[fi];
        for (VertexIndex idx : f) {
            if (idx >= n) {
                throw Error(ErrorCode::MalformedGeometry,
                            "face " + std::to_string(fi) + " references vertex " +
                                std::to_string(idx) + " but mesh has " + std::to_string(n) +
                                " vertices");
            }
        }
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
            throw Error(ErrorCode::MalformedGeometry,
                        "face " + std::to_string(fi) + " repeats a vertex index");
        }
    }
    TriangleMesh mesh;
    mesh.adjacency = build_adjacency(n, faces);
    mesh.vertices = std::move(vertices);
    mesh.faces = std::move(faces);
    return mesh;
}

/// Area-weighted vertex normals, unit length. Vertices with no incident face
/// (or a zero area-weighted sum) fall back to (0,0,1) so every vertex has a
/// usable feature.
inline std::vector<Vec3> compute_vertex_normals(const TriangleMesh& mesh) {
    std::vector<Vec3> acc(mesh.vertex_count(), Vec3{0.0, 0.0, 0.0});
    for (const Face& f : mesh.faces) {
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        // cross product of edge vectors = 2 * area * unit normal
        const Vec3 weighted = cross(b - a, c - a);
        acc[f[0]] += weighted;
        acc[f[1]] += weighted;
        acc[f[2]] += weighted;
    }
    for (Vec3& n : acc) {
        const double len = norm(n);
        n = len > 1e-20 ? n / len : Vec3{0.0, 0.0, 1.0};
    }
    return acc;
}

inline Vec3 mesh_centroid(const TriangleMesh& mesh) {
    Vec3 c{0.0, 0.0, 0.0};
    if (mesh.vertices.empty()) return c;
    for (const Vec3& v : mesh.vertices) c += v;
    return c / static_cast<double>(mesh.vertices.size());
}

struct Aabb {
    Vec3 min;
    Vec3 max;
};

inline Aabb bounding_box(const TriangleMesh& mesh) {
    if (mesh.vertices.empty()) {
        throw Error(ErrorCode::InvalidArgument, "bounding box of empty mesh");
    }
    Aabb box{mesh.vertices[0], mesh.vertices[0]};
    for (const Vec3& v : mesh.vertices) {
        box.min.x = std::min(box.min.x, v.x);
        box.min.y = std::min(box.min.y, v.y);
        box.min.z = std::min(box.min.z, v.z);
        box.max.x = std::max(box.max.x, v.x);
        box.max.y = std::max(box.max.y, v.y);
        box.max.z = std::max(box.max.z, v.z);
    }
    return box;
}

/// Nearest vertex to a point by Euclidean distance; ties resolve to the
/// lowest index.
inline VertexIndex nearest_vertex(const TriangleMesh& mesh, const Vec3& p) {
    if (mesh.vertices.empty()) {
        throw Error(ErrorCode::InvalidArgument, "nearest vertex on empty mesh");
    }
    VertexIndex best = 0;
    double best_d2 = squared_norm(mesh.vertices[0] - p);
    for (VertexIndex i = 1; i < mesh.vertex_count(); ++i) {
        const double d2 = squared_norm(mesh.vertices[i] - p);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

}  // namespace dentalmark
