#include "lpr/enhancer.hpp"

#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lpr {

void DegradeSpec::validate() const {
    if (!(noise_sigma >= 0.0))
        throw SpecInvalid("noise_sigma must be non-negative");
    if (!(contrast_scale > 0.0 && contrast_scale <= 1.0))
        throw SpecInvalid("contrast_scale must be in (0, 1]");
    if (const auto* g = std::get_if<GaussianBlur>(&blur); g && !(g->sigma > 0.0))
        throw SpecInvalid("gaussian blur sigma must be positive");
    if (const auto* m = std::get_if<MedianBlur>(&blur); m && (m->k < 3 || m->k % 2 == 0))
        throw SpecInvalid("median blur size must be odd and at least 3");
}

GaussianNoise::GaussianNoise(std::uint64_t seed) : engine_(seed) {}

double GaussianNoise::uniform() {
    // 53 random bits, offset by half a step so the result is never 0.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianNoise::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

GrayImage enhance(const GrayImage& plate) {
    if (plate.width() < 8 || plate.height() < 4)
        throw TooSmall("plate must be at least 8x4 to enhance");
    GrayImage out = contrast_stretch(median3x3(plate), 2.0, 98.0);
    const int new_w = std::max(8, static_cast<int>(std::lround(
                                      static_cast<double>(out.width()) * kEnhancedHeight / out.height())));
    return resize_bilinear(out, new_w, kEnhancedHeight);
}

GrayImage degrade(const GrayImage& img, const DegradeSpec& spec) {
    spec.validate();
    GrayImage out = img;
    if (spec.contrast_scale != 1.0) {
        for (auto& p : out.pixels())
            p = static_cast<std::uint8_t>(
                std::clamp(std::lround(128.0 + (p - 128.0) * spec.contrast_scale), 0L, 255L));
    }
    if (const auto* g = std::get_if<GaussianBlur>(&spec.blur))
        out = gaussian_blur(out, g->sigma);
    else if (const auto* m = std::get_if<MedianBlur>(&spec.blur))
        out = median_filter(out, m->k);

    if (spec.noise_sigma > 0.0) {
        GaussianNoise noise(spec.seed);
        for (auto& p : out.pixels())
            p = static_cast<std::uint8_t>(std::clamp(std::lround(p + spec.noise_sigma * noise.next()), 0L, 255L));
    }
    return out;
}

}  // namespace lpr
