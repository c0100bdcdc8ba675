#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "dentalmark/error.hpp"
#include "dentalmark/mesh.hpp"
#include "dentalmark/rng.hpp"

namespace dentalmark {

/// Default stratification target: 64 000 points.
inline constexpr std::size_t kDefaultSampleSize = 64000;

enum class SampleMethod { Random, Fps };

/// Result of stratification or FPS: unique vertex indices plus the inputs
/// that produced them, for reproducibility audits.
struct SampleSelection {
    std::vector<VertexIndex> indices;
    std::uint64_t seed = 0;
    SampleMethod method = SampleMethod::Random;
    std::size_t target_size = 0;
};

/// Uniform sample without replacement via partial Fisher-Yates. When the
/// mesh has at most target_size vertices, all indices are returned in
/// ascending order.
inline SampleSelection stratify_random(const TriangleMesh& mesh, std::size_t target_size,
                                       std::uint64_t seed) {
    if (target_size == 0) {
        throw Error(ErrorCode::InvalidArgument, "target_size must be >= 1");
    }
    const std::size_t n = mesh.vertex_count();
    SampleSelection sel;
    sel.seed = seed;
    sel.method = SampleMethod::Random;
    sel.target_size = target_size;
    if (n <= target_size) {
        sel.indices.resize(n);
        std::iota(sel.indices.begin(), sel.indices.end(), VertexIndex{0});
        return sel;
    }
    std::vector<VertexIndex> pool(n);
    std::iota(pool.begin(), pool.end(), VertexIndex{0});
    Rng rng(seed);
    sel.indices.reserve(target_size);
    for (std::size_t i = 0; i < target_size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(n - i));
        std::swap(pool[i], pool[j]);
        sel.indices.push_back(pool[i]);
    }
    return sel;
}

/// Greedy farthest-point sampling under Euclidean distance. The first point
/// is drawn uniformly from the seed unless `first_index` pins it; each next
/// point maximizes the distance to the selected set, ties broken by lowest
/// index. target_size >= point count returns all indices.
inline SampleSelection farthest_point_sample(std::span<const Vec3> points,
                                             std::size_t target_size, std::uint64_t seed,
                                             std::optional<VertexIndex> first_index = std::nullopt) {
    if (target_size == 0) {
        throw Error(ErrorCode::InvalidArgument, "target_size must be >= 1");
    }
    if (points.empty()) {
        throw Error(ErrorCode::InvalidArgument, "farthest_point_sample on empty point set");
    }
    const std::size_t n = points.size();
    SampleSelection sel;
    sel.seed = seed;
    sel.method = SampleMethod::Fps;
    sel.target_size = target_size;
    if (target_size >= n) {
        sel.indices.resize(n);
        std::iota(sel.indices.begin(), sel.indices.end(), VertexIndex{0});
        return sel;
    }

    VertexIndex current = first_index.value_or(
        static_cast<VertexIndex>(Rng(seed).uniform_index(n)));
    if (current >= n) {
        throw Error(ErrorCode::InvalidArgument, "first_index out of range");
    }
    sel.indices.push_back(current);

    std::vector<bool> selected(n, false);
    selected[current] = true;
    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
    for (std::size_t step = 1; step < target_size; ++step) {
        VertexIndex best = 0;
        double best_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d2 = squared_norm(points[i] - points[current]);
            if (d2 < min_d2[i]) min_d2[i] = d2;
            if (!selected[i] && min_d2[i] > best_d2) {
                best_d2 = min_d2[i];
                best = static_cast<VertexIndex>(i);
            }
        }
        current = best;
        selected[current] = true;
        sel.indices.push_back(current);
    }
    return sel;
}

inline SampleSelection farthest_point_sample(const TriangleMesh& mesh, std::size_t target_size,
                                             std::uint64_t seed,
                                             std::optional<VertexIndex> first_index = std::nullopt) {
    return farthest_point_sample(std::span<const Vec3>(mesh.vertices), target_size, seed,
                                 first_index);
}

}  // namespace dentalmark
