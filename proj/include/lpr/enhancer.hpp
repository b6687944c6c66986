#pragma once

#include "lpr/image.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <variant>

namespace lpr {

struct NoBlur {
    friend bool operator==(const NoBlur&, const NoBlur&) = default;
};
struct GaussianBlur {
    double sigma = 1.0;
    friend bool operator==(const GaussianBlur&, const GaussianBlur&) = default;
};
struct MedianBlur {
    int k = 3;
    friend bool operator==(const MedianBlur&, const MedianBlur&) = default;
};
using BlurSpec = std::variant<NoBlur, GaussianBlur, MedianBlur>;

/// Low-quality capture simulation: contrast compression toward 128, then
/// blur, then additive Gaussian noise from a seeded generator.
struct DegradeSpec {
    double noise_sigma = 0.0;
    BlurSpec blur = NoBlur{};
    double contrast_scale = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
    bool neutral() const noexcept {
        return noise_sigma == 0.0 && std::holds_alternative<NoBlur>(blur) && contrast_scale == 1.0;
    }
};

/// Plate enhancement stage: any image-to-image mapping.
using Enhancer = std::function<GrayImage(const GrayImage&)>;

inline constexpr int kEnhancedHeight = 64;

/// median3x3 -> contrast_stretch(2, 98) -> bilinear resize to height 64.
/// Throws TooSmall for plates under 8x4.
GrayImage enhance(const GrayImage& plate);

GrayImage degrade(const GrayImage& img, const DegradeSpec& spec);

/// Standard normal deviates via Box-Muller over a 64-bit Mersenne Twister,
/// so noise is reproducible across standard libraries.
class GaussianNoise {
public:
    explicit GaussianNoise(std::uint64_t seed);
    double next();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
    double uniform();
};

}  // namespace lpr
