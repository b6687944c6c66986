#pragma once

// Template-matching plate reader: Otsu binarization, connected-component
// glyph segmentation and normalized cross-correlation against a 36-symbol
// atlas.

#include "lpr/font.hpp"
#include "lpr/image.hpp"
#include "lpr/plate_format.hpp"
#include "lpr/transformer.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lpr {

class GlyphAtlas {
public:
    static constexpr std::size_t kEntries = kSymbols.size();

    /// Exactly 36 binary 16x24 bitmaps in kSymbols order, each at least 10% ink.
    explicit GlyphAtlas(std::vector<GrayImage> entries);

    /// Atlas derived from the built-in font.
    static const GlyphAtlas& builtin();

    /// 36 concatenated canonical 16x24 P5 images, symbol order.
    static GlyphAtlas from_netpbm(std::span<const std::uint8_t> bytes);
    std::vector<std::uint8_t> to_netpbm() const;

    const GrayImage& entry(std::size_t i) const { return entries_[i]; }
    const GrayImage& glyph(char symbol) const;

    /// Mean-centred samples and their L2 norm, precomputed for matching.
    std::span<const double> centred(std::size_t i) const { return centred_[i]; }
    double norm(std::size_t i) const { return norms_[i]; }

private:
    std::vector<GrayImage> entries_;
    std::vector<std::vector<double>> centred_;
    std::vector<double> norms_;
};

/// Otsu threshold: the t maximizing between-class variance of {v <= t} and
/// {v > t}; nullopt when the image has a single intensity.
std::optional<int> otsu_threshold(const GrayImage& img);

/// Ink = 255, background = 0. The smaller Otsu class is taken as ink.
GrayImage binarize_otsu(const GrayImage& img);

/// Erases ink components that touch the image border.
GrayImage clear_border_ink(const GrayImage& binary);

/// 4-connected ink components, minus specks (< 20 px) and anything shorter
/// than 40% of the tallest component, left to right. Throws NoGlyphs.
std::vector<BBox> segment_glyphs(const GrayImage& binary);

struct GlyphMatch {
    char symbol = '?';
    double score = 0.0;
};

/// Throws BlankGlyph when the glyph has no ink.
GlyphMatch classify_glyph(const GrayImage& glyph, const GlyphAtlas& atlas);

struct Reading {
    std::string raw_text;
    double confidence = 0.0;
    std::vector<double> glyph_scores;
};

/// Single-image OCR contract.
using Ocr = std::function<Reading(const GrayImage&)>;

/// binarize -> clear border ink -> segment -> classify. Falls back to the
/// uncleared image when clearing leaves no glyphs. Throws NoGlyphs.
Reading recognize(const GrayImage& plate, const GlyphAtlas& atlas);

struct RecognitionCandidate {
    std::string raw_text;
    std::optional<std::string> corrected_text;
    double confidence = 0.0;
    TransformVariant variant;

    friend bool operator==(const RecognitionCandidate&, const RecognitionCandidate&) = default;
};

/// Reads every transformer variant of the plate and format-corrects each
/// reading of legal length. Sorted by (corrected present, confidence)
/// descending, then variant order. Throws NoGlyphs when no variant reads.
std::vector<RecognitionCandidate> recognize_candidates(const GrayImage& plate, const Ocr& ocr,
                                                       const AnalogTable& table = AnalogTable::standard());
std::vector<RecognitionCandidate> recognize_candidates(const GrayImage& plate, const GlyphAtlas& atlas,
                                                       const AnalogTable& table = AnalogTable::standard());

}  // namespace lpr
