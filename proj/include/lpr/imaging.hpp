#pragma once

// Raster operations shared by every pipeline stage. All of them return new
// images and never modify their input. Out-of-range samples replicate the
// nearest edge pixel.

#include "lpr/image.hpp"

#include <cstdint>

namespace lpr {

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
GrayImage to_gray(const RgbImage& img);

/// k x k median (k odd, >= 1) with edge-replicate padding.
GrayImage median_filter(const GrayImage& img, int k);
inline GrayImage median3x3(const GrayImage& img) { return median_filter(img, 3); }

/// Nearest-rank percentile of the pixel multiset, `pct` in [0, 100].
std::uint8_t percentile(const GrayImage& img, double pct);

/// Linear stretch mapping the lo/hi percentiles onto 0 and 255.
/// A copy of the input is returned when both percentiles coincide.
GrayImage contrast_stretch(const GrayImage& img, double lo_pct, double hi_pct);

/// Bilinear resampling with half-pixel centres.
GrayImage resize_bilinear(const GrayImage& img, int new_w, int new_h);

/// Bilinear sample at a real-valued position, clamping to the edges.
double sample_bilinear(const GrayImage& img, double x, double y) noexcept;

/// Rotation about the image centre; positive angles turn the content
/// counter-clockwise as displayed. Output has the input's dimensions.
GrayImage rotate(const GrayImage& img, double degrees);

/// Throws OutOfBounds unless the box lies inside the image.
GrayImage crop(const GrayImage& img, const BBox& box);

/// Removes `px` pixels from every side; throws TooSmall when nothing would remain.
GrayImage shrink_border(const GrayImage& img, int px);

/// Separable Gaussian, radius ceil(3 sigma), kernel normalised to 1.
GrayImage gaussian_blur(const GrayImage& img, double sigma);

}  // namespace lpr
