#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dentalmark/vec3.hpp"

namespace dentalmark {

/// The six anatomical landmark categories. The numeric order is fixed and
/// doubles as the channel index of distance maps.
enum class LandmarkClass : int {
    Mesial = 0,
    Distal = 1,
    Cusp = 2,
    Inner = 3,
    Outer = 4,
    Facial = 5,
};

inline constexpr std::size_t kLandmarkClassCount = 6;

inline constexpr std::array<LandmarkClass, kLandmarkClassCount> all_landmark_classes() {
    return {LandmarkClass::Mesial, LandmarkClass::Distal, LandmarkClass::Cusp,
            LandmarkClass::Inner,  LandmarkClass::Outer,  LandmarkClass::Facial};
}

inline constexpr std::string_view landmark_class_name(LandmarkClass c) {
    switch (c) {
        case LandmarkClass::Mesial: return "Mesial";
        case LandmarkClass::Distal: return "Distal";
        case LandmarkClass::Cusp: return "Cusp";
        case LandmarkClass::Inner: return "Inner";
        case LandmarkClass::Outer: return "Outer";
        case LandmarkClass::Facial: return "Facial";
    }
    return "?";
}

inline std::optional<LandmarkClass> parse_landmark_class(std::string_view name) {
    for (LandmarkClass c : all_landmark_classes()) {
        if (landmark_class_name(c) == name) return c;
    }
    return std::nullopt;
}

/// Per-class point collections (ground truth or detections), mm coordinates.
/// Every class slot is always present; empty lists are meaningful.
struct LandmarkSet {
    std::array<std::vector<Vec3>, kLandmarkClassCount> points;

    std::vector<Vec3>& operator[](LandmarkClass c) {
        return points[static_cast<std::size_t>(c)];
    }
    const std::vector<Vec3>& operator[](LandmarkClass c) const {
        return points[static_cast<std::size_t>(c)];
    }

    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& v : points) n += v.size();
        return n;
    }
};

}  // namespace dentalmark
