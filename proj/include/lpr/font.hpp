#pragma once

// Built-in block font shared by the plate renderer and the glyph atlas.

#include "lpr/image.hpp"

#include <cstddef>
#include <string_view>

namespace lpr {

inline constexpr int kGlyphWidth = 16;
inline constexpr int kGlyphHeight = 24;
inline constexpr int kFontColumns = 8;
inline constexpr int kFontRows = 12;
inline constexpr int kFontScale = kGlyphWidth / kFontColumns;

/// Atlas order: A..Z then 0..9.
inline constexpr std::string_view kSymbols = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// Position of `symbol` in kSymbols; throws InvalidCharacter otherwise.
std::size_t symbol_index(char symbol);

/// Master 8x12 bitmap lookup.
bool font_master_pixel(char symbol, int col, int row);

/// 16x24 cell, ink = 255, background = 0.
GrayImage font_cell(char symbol);

}  // namespace lpr
