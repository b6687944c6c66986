#pragma once

// Rotation/crop variants of a plate image. Recognition runs on every variant
// so that at least one of them is close to horizontal.

#include "lpr/image.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace lpr {

struct TransformVariant {
    double rotation_deg = 0.0;  // within [-12, 12]
    int crop_px = 0;            // within [0, 25]

    friend bool operator==(const TransformVariant&, const TransformVariant&) = default;
};

inline constexpr std::size_t kVariantCount = 20;
inline constexpr std::array<double, 5> kVariantRotations{-12.0, -6.0, 0.0, 6.0, 12.0};
inline constexpr std::array<int, 4> kVariantCrops{0, 8, 17, 25};

/// Rotations x crops, rotation-major.
const std::array<TransformVariant, kVariantCount>& variant_set();

/// Crop actually applied to a w x h plate: min(crop_px, floor(min(w, h) / 4)),
/// further limited so at least 8x4 pixels remain.
int effective_crop(int crop_px, int width, int height) noexcept;

/// Rotate, then trim the effective crop from every side.
GrayImage apply_variant(const GrayImage& plate, const TransformVariant& v);

struct VariantImage {
    TransformVariant variant;
    GrayImage image;
};

/// One image per member of variant_set(), in order. Throws TooSmall for plates under 8x4.
std::vector<VariantImage> expand(const GrayImage& plate);

}  // namespace lpr
