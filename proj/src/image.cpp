#include "lpr/image.hpp"

#include "lpr/errors.hpp"

#include <algorithm>
#include <string>

namespace lpr {

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1)
        throw Error("image dimensions must be positive, got " + std::to_string(width) + "x" + std::to_string(height));
}

}  // namespace

double iou(const BBox& a, const BBox& b) noexcept {
    const int ix0 = std::max(a.x, b.x);
    const int iy0 = std::max(a.y, b.y);
    const int ix1 = std::min(a.right(), b.right());
    const int iy1 = std::min(a.bottom(), b.bottom());
    if (ix1 <= ix0 || iy1 <= iy0)
        return 0.0;
    const double inter = static_cast<double>(ix1 - ix0) * static_cast<double>(iy1 - iy0);
    const double uni = static_cast<double>(a.area()) + static_cast<double>(b.area()) - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw Error("gray image data size does not match dimensions");
}

std::uint8_t GrayImage::clamped(int x, int y) const noexcept {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return data_[index(x, y)];
}

RgbImage::RgbImage(int width, int height) : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != 3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw Error("rgb image data size does not match dimensions");
}

}  // namespace lpr
