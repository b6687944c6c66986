#include "lpr/imaging.hpp"

#include "lpr/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace lpr {

namespace {

std::uint8_t to_byte(double v) noexcept {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

}  // namespace

GrayImage to_gray(const RgbImage& img) {
    GrayImage out(img.width(), img.height());
    const auto src = img.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = to_byte(0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2]);
    return out;
}

GrayImage median_filter(const GrayImage& img, int k) {
    if (k < 1 || k % 2 == 0)
        throw Error("median kernel size must be odd and positive");
    const int r = k / 2;
    GrayImage out(img.width(), img.height());
    std::vector<std::uint8_t> window(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    const auto mid = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            std::size_t n = 0;
            for (int dy = -r; dy <= r; ++dy)
                for (int dx = -r; dx <= r; ++dx)
                    window[n++] = img.clamped(x + dx, y + dy);
            std::nth_element(window.begin(), mid, window.end());
            out.at(x, y) = *mid;
        }
    }
    return out;
}

std::uint8_t percentile(const GrayImage& img, double pct) {
    std::array<std::size_t, 256> hist{};
    for (auto v : img.pixels())
        ++hist[v];
    const std::size_t n = img.pixels().size();
    auto rank = static_cast<std::size_t>(std::ceil(std::clamp(pct, 0.0, 100.0) / 100.0 * static_cast<double>(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    std::size_t seen = 0;
    for (int v = 0; v < 256; ++v) {
        seen += hist[static_cast<std::size_t>(v)];
        if (seen >= rank)
            return static_cast<std::uint8_t>(v);
    }
    return 255;
}

GrayImage contrast_stretch(const GrayImage& img, double lo_pct, double hi_pct) {
    if (!(lo_pct >= 0.0 && lo_pct < hi_pct && hi_pct <= 100.0))
        throw Error("contrast_stretch requires 0 <= lo < hi <= 100");
    const int a = percentile(img, lo_pct);
    const int b = percentile(img, hi_pct);
    if (a == b)
        return img;

    std::array<std::uint8_t, 256> lut{};
    for (int v = 0; v < 256; ++v)
        lut[static_cast<std::size_t>(v)] = to_byte(255.0 * (v - a) / (b - a));
    GrayImage out = img;
    for (auto& p : out.pixels())
        p = lut[p];
    return out;
}

double sample_bilinear(const GrayImage& img, double x, double y) noexcept {
    x = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
    y = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    const double p00 = img.clamped(x0, y0);
    const double p10 = img.clamped(x0 + 1, y0);
    const double p01 = img.clamped(x0, y0 + 1);
    const double p11 = img.clamped(x0 + 1, y0 + 1);
    const double top = p00 + (p10 - p00) * fx;
    const double bottom = p01 + (p11 - p01) * fx;
    return top + (bottom - top) * fy;
}

GrayImage resize_bilinear(const GrayImage& img, int new_w, int new_h) {
    if (new_w < 1 || new_h < 1)
        throw Error("resize target must be at least 1x1");
    if (new_w == img.width() && new_h == img.height())
        return img;
    const double sx = static_cast<double>(img.width()) / new_w;
    const double sy = static_cast<double>(img.height()) / new_h;
    GrayImage out(new_w, new_h);
    for (int y = 0; y < new_h; ++y) {
        const double src_y = (y + 0.5) * sy - 0.5;
        for (int x = 0; x < new_w; ++x)
            out.at(x, y) = to_byte(sample_bilinear(img, (x + 0.5) * sx - 0.5, src_y));
    }
    return out;
}

GrayImage rotate(const GrayImage& img, double degrees) {
    if (degrees == 0.0)
        return img;
    const double theta = degrees * std::numbers::pi / 180.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cx = (img.width() - 1) / 2.0;
    const double cy = (img.height() - 1) / 2.0;
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        const double dy = y - cy;
        for (int x = 0; x < img.width(); ++x) {
            const double dx = x - cx;
            out.at(x, y) = to_byte(sample_bilinear(img, cx + dx * c - dy * s, cy + dx * s + dy * c));
        }
    }
    return out;
}

GrayImage crop(const GrayImage& img, const BBox& box) {
    if (!box.inside(img.width(), img.height()))
        throw OutOfBounds("crop box (" + std::to_string(box.x) + "," + std::to_string(box.y) + "," +
                          std::to_string(box.w) + "," + std::to_string(box.h) + ") outside " +
                          std::to_string(img.width()) + "x" + std::to_string(img.height()));
    GrayImage out(box.w, box.h);
    for (int y = 0; y < box.h; ++y)
        for (int x = 0; x < box.w; ++x)
            out.at(x, y) = img.at(box.x + x, box.y + y);
    return out;
}

GrayImage shrink_border(const GrayImage& img, int px) {
    if (px < 0)
        throw Error("shrink_border amount must be non-negative");
    if (2 * px >= img.width() || 2 * px >= img.height())
        throw TooSmall("cannot remove " + std::to_string(px) + " px from each side of " +
                       std::to_string(img.width()) + "x" + std::to_string(img.height()));
    if (px == 0)
        return img;
    return crop(img, BBox{px, px, img.width() - 2 * px, img.height() - 2 * px});
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
    if (!(sigma > 0.0))
        throw Error("gaussian sigma must be positive");
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-(i * i) / (2.0 * sigma * sigma));
        kernel[static_cast<std::size_t>(i + radius)] = v;
        sum += v;
    }
    for (auto& v : kernel)
        v /= sum;

    const int w = img.width();
    const int h = img.height();
    std::vector<double> horiz(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[static_cast<std::size_t>(i + radius)] * img.clamped(x + i, y);
            horiz[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                const int yy = std::clamp(y + i, 0, h - 1);
                acc += kernel[static_cast<std::size_t>(i + radius)] * horiz[static_cast<std::size_t>(yy) * w + x];
            }
            out.at(x, y) = to_byte(acc);
        }
    }
    return out;
}

}  // namespace lpr
