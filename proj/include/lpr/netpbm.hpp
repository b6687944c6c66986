#pragma once

// Binary netpbm (P5 gray / P6 color, maxval 255) codec.

#include "lpr/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

namespace lpr {

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Throws BadMagic, TruncatedData or UnsupportedMaxval.
AnyImage read_netpbm(std::span<const std::uint8_t> bytes);

/// Canonical form: "P5\n<w> <h>\n255\n" (or P6) followed by raw samples.
std::vector<std::uint8_t> write_netpbm(const GrayImage& img);
std::vector<std::uint8_t> write_netpbm(const RgbImage& img);
std::vector<std::uint8_t> write_netpbm(const AnyImage& img);

AnyImage read_netpbm_file(const std::filesystem::path& path);
/// Reads P5 or P6; color input is converted with to_gray.
GrayImage read_gray_file(const std::filesystem::path& path);
void write_netpbm_file(const std::filesystem::path& path, const AnyImage& img);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lpr
