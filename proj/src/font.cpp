#include "lpr/font.hpp"

#include "lpr/errors.hpp"

#include <array>
#include <string>

namespace lpr {

namespace {

// 8x12 master bitmaps, two-pixel strokes, each glyph a single 4-connected
// shape. Rendered at 2x to fill the 16x24 cell.
using Bitmap = std::array<const char*, kFontRows>;

constexpr std::array<Bitmap, 36> kGlyphs{{
    // A
    {"..####..", ".######.", "###..###", "##....##", "##....##", "##....##",
     "########", "########", "##....##", "##....##", "##....##", "##....##"},
    // B
    {"######..", "#######.", "##...###", "##....##", "##...###", "#######.",
     "#######.", "##...###", "##....##", "##...###", "#######.", "######.."},
    // C
    {"..######", ".#######", "###.....", "##......", "##......", "##......",
     "##......", "##......", "##......", "###.....", ".#######", "..######"},
    // D
    {"######..", "#######.", "##...###", "##....##", "##....##", "##....##",
     "##....##", "##....##", "##....##", "##...###", "#######.", "######.."},
    // E
    {"########", "########", "##......", "##......", "##......", "######..",
     "######..", "##......", "##......", "##......", "########", "########"},
    // F
    {"########", "########", "##......", "##......", "##......", "######..",
     "######..", "##......", "##......", "##......", "##......", "##......"},
    // G
    {"..######", ".#######", "###.....", "##......", "##......", "##..####",
     "##..####", "##....##", "##....##", "###..###", ".######.", "..####.."},
    // H
    {"##....##", "##....##", "##....##", "##....##", "##....##", "########",
     "########", "##....##", "##....##", "##....##", "##....##", "##....##"},
    // I
    {"########", "########", "...##...", "...##...", "...##...", "...##...",
     "...##...", "...##...", "...##...", "...##...", "########", "########"},
    // J
    {"########", "########", ".....##.", ".....##.", ".....##.", ".....##.",
     ".....##.", ".....##.", "##...##.", "##...##.", ".#####..", "..###..."},
    // K
    {"##....##", "##...###", "##..###.", "##.###..", "#####...", "####....",
     "####....", "#####...", "##.###..", "##..###.", "##...###", "##....##"},
    // L
    {"##......", "##......", "##......", "##......", "##......", "##......",
     "##......", "##......", "##......", "##......", "########", "########"},
    // M
    {"##....##", "###..###", "########", "##.##.##", "##.##.##", "##....##",
     "##....##", "##....##", "##....##", "##....##", "##....##", "##....##"},
    // N
    {"##....##", "###...##", "####..##", "##.##.##", "##.##.##", "##..####",
     "##..####", "##...###", "##...###", "##....##", "##....##", "##....##"},
    // O
    {"..####..", ".######.", "###..###", "##....##", "##....##", "##....##",
     "##....##", "##....##", "##....##", "###..###", ".######.", "..####.."},
    // P
    {"######..", "#######.", "##...###", "##....##", "##...###", "#######.",
     "######..", "##......", "##......", "##......", "##......", "##......"},
    // Q
    {"..####..", ".######.", "###..###", "##....##", "##....##", "##....##",
     "##....##", "##.##.##", "##..####", "###..###", ".#######", "..######"},
    // R
    {"######..", "#######.", "##...###", "##....##", "##...###", "#######.",
     "######..", "##.###..", "##..###.", "##...###", "##....##", "##....##"},
    // S
    {"..######", ".#######", "###.....", "##......", "###.....", ".#####..",
     "..#####.", ".....###", "......##", ".....###", "#######.", "######.."},
    // T
    {"########", "########", "...##...", "...##...", "...##...", "...##...",
     "...##...", "...##...", "...##...", "...##...", "...##...", "...##..."},
    // U
    {"##....##", "##....##", "##....##", "##....##", "##....##", "##....##",
     "##....##", "##....##", "##....##", "###..###", ".######.", "..####.."},
    // V
    {"##....##", "##....##", "##....##", "##....##", "##....##", "###..###",
     ".##..##.", ".##..##.", "..####..", "..####..", "...##...", "...##..."},
    // W
    {"##....##", "##....##", "##....##", "##....##", "##....##", "##....##",
     "##....##", "##.##.##", "##.##.##", "########", "###..###", "##....##"},
    // X
    {"##....##", "##....##", "###..###", ".######.", "..####..", "...##...",
     "...##...", "..####..", ".######.", "###..###", "##....##", "##....##"},
    // Y
    {"##....##", "##....##", "###..###", ".######.", "..####..", "...##...",
     "...##...", "...##...", "...##...", "...##...", "...##...", "...##..."},
    // Z
    {"########", "########", "......##", ".....###", "....###.", "...###..",
     "..###...", ".###....", "###.....", "##......", "########", "########"},
    // 0 (slashed)
    {"..####..", ".######.", "###..###", "##...###", "##..####", "##.##.##",
     "##.##.##", "####..##", "###...##", "###..###", ".######.", "..####.."},
    // 1
    {"...##...", "..###...", ".####...", "##.##...", "...##...", "...##...",
     "...##...", "...##...", "...##...", "...##...", "########", "########"},
    // 2
    {"..####..", ".######.", "###..###", "......##", ".....###", "....###.",
     "...###..", "..###...", ".###....", "###.....", "########", "########"},
    // 3
    {"######..", "#######.", ".....###", "......##", ".....###", "..#####.",
     "..#####.", ".....###", "......##", ".....###", "#######.", "######.."},
    // 4
    {".....##.", "....###.", "...####.", "..##.##.", ".##..##.", "##...##.",
     "########", "########", ".....##.", ".....##.", ".....##.", ".....##."},
    // 5
    {"########", "########", "##......", "##......", "######..", "#######.",
     ".....###", "......##", "......##", "##...###", "#######.", ".#####.."},
    // 6
    {"..######", ".#######", "###.....", "##......", "##......", "#######.",
     "########", "##....##", "##....##", "###..###", ".######.", "..####.."},
    // 7
    {"########", "########", "......##", ".....###", ".....##.", "....###.",
     "....##..", "...###..", "...##...", "...##...", "...##...", "...##..."},
    // 8
    {"..####..", ".######.", "###..###", "##....##", "###..###", ".######.",
     ".######.", "###..###", "##....##", "###..###", ".######.", "..####.."},
    // 9
    {"..####..", ".######.", "###..###", "##....##", "##....##", "###..###",
     ".#######", "..######", "......##", ".....###", "#######.", "######.."},
}};

}  // namespace

std::size_t symbol_index(char symbol) {
    if (symbol >= 'A' && symbol <= 'Z')
        return static_cast<std::size_t>(symbol - 'A');
    if (symbol >= '0' && symbol <= '9')
        return 26 + static_cast<std::size_t>(symbol - '0');
    throw InvalidCharacter(symbol, 0);
}

bool font_master_pixel(char symbol, int col, int row) {
    return kGlyphs[symbol_index(symbol)][static_cast<std::size_t>(row)][col] == '#';
}

GrayImage font_cell(char symbol) {
    const Bitmap& bits = kGlyphs[symbol_index(symbol)];
    GrayImage cell(kGlyphWidth, kGlyphHeight, 0);
    for (int y = 0; y < kGlyphHeight; ++y)
        for (int x = 0; x < kGlyphWidth; ++x)
            if (bits[static_cast<std::size_t>(y / kFontScale)][x / kFontScale] == '#')
                cell.at(x, y) = 255;
    return cell;
}

}  // namespace lpr
