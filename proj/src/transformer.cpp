#include "lpr/transformer.hpp"

#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"

#include <algorithm>
#include <string>

namespace lpr {

namespace {

void require_min_size(int w, int h) {
    if (w < 8 || h < 4)
        throw TooSmall("plate variant must be at least 8x4, got " + std::to_string(w) + "x" + std::to_string(h));
}

}  // namespace

const std::array<TransformVariant, kVariantCount>& variant_set() {
    static const auto variants = [] {
        std::array<TransformVariant, kVariantCount> out{};
        std::size_t i = 0;
        for (double r : kVariantRotations)
            for (int c : kVariantCrops)
                out[i++] = TransformVariant{r, c};
        return out;
    }();
    return variants;
}

int effective_crop(int crop_px, int width, int height) noexcept {
    // Never trim below the 8x4 minimum a recognizer can use.
    const int floor_limit = std::min((width - 8) / 2, (height - 4) / 2);
    return std::max(0, std::min({crop_px, std::min(width, height) / 4, floor_limit}));
}

GrayImage apply_variant(const GrayImage& plate, const TransformVariant& v) {
    require_min_size(plate.width(), plate.height());
    const int crop = effective_crop(v.crop_px, plate.width(), plate.height());
    require_min_size(plate.width() - 2 * crop, plate.height() - 2 * crop);
    return shrink_border(rotate(plate, v.rotation_deg), crop);
}

std::vector<VariantImage> expand(const GrayImage& plate) {
    std::vector<VariantImage> out;
    out.reserve(kVariantCount);
    for (const TransformVariant& v : variant_set())
        out.push_back(VariantImage{v, apply_variant(plate, v)});
    return out;
}

}  // namespace lpr
