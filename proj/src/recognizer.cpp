#include "lpr/recognizer.hpp"

#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"
#include "lpr/netpbm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace lpr {

namespace {

constexpr int kMinGlyphArea = 20;
constexpr double kMinGlyphHeightRatio = 0.4;
constexpr double kMinAtlasInk = 0.10;

struct Component {
    BBox box;
    int area = 0;
    bool touches_border = false;
};

// 4-connected components of ink (non-zero) pixels. When `labels` is given it
// receives the 1-based component id of every pixel.
std::vector<Component> ink_components(const GrayImage& binary, std::vector<int>* labels = nullptr) {
    const int w = binary.width();
    const int h = binary.height();
    std::vector<int> label(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
    std::vector<Component> out;
    std::vector<int> stack;
    const auto px = binary.pixels();
    for (int start = 0; start < w * h; ++start) {
        if (!px[static_cast<std::size_t>(start)] || label[static_cast<std::size_t>(start)])
            continue;
        const int id = static_cast<int>(out.size()) + 1;
        Component comp;
        int x0 = w, y0 = h, x1 = -1, y1 = -1;
        label[static_cast<std::size_t>(start)] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int x = p % w;
            const int y = p / w;
            ++comp.area;
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
            const std::array<std::pair<int, int>, 4> nbrs{{{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}}};
            for (auto [nx, ny] : nbrs) {
                if (nx < 0 || ny < 0 || nx >= w || ny >= h)
                    continue;
                const auto q = static_cast<std::size_t>(ny) * w + nx;
                if (px[q] && !label[q]) {
                    label[q] = id;
                    stack.push_back(static_cast<int>(q));
                }
            }
        }
        comp.box = BBox{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
        comp.touches_border = x0 == 0 || y0 == 0 || x1 == w - 1 || y1 == h - 1;
        out.push_back(comp);
    }
    if (labels)
        *labels = std::move(label);
    return out;
}

// Tight ink box of a font cell, rescaled to the full cell and re-binarized.
GrayImage normalize_cell(const GrayImage& cell) {
    const auto comps = ink_components(cell);
    BBox box = comps.front().box;
    for (const auto& c : comps) {
        const int x0 = std::min(box.x, c.box.x);
        const int y0 = std::min(box.y, c.box.y);
        box = BBox{x0, y0, std::max(box.right(), c.box.right()) - x0, std::max(box.bottom(), c.box.bottom()) - y0};
    }
    GrayImage out = resize_bilinear(crop(cell, box), kGlyphWidth, kGlyphHeight);
    for (auto& p : out.pixels())
        p = p >= 128 ? 255 : 0;
    return out;
}

}  // namespace

GlyphAtlas::GlyphAtlas(std::vector<GrayImage> entries) : entries_(std::move(entries)) {
    if (entries_.size() != kEntries)
        throw Error("glyph atlas needs exactly 36 entries");
    for (const GrayImage& e : entries_) {
        if (e.width() != kGlyphWidth || e.height() != kGlyphHeight)
            throw Error("glyph atlas entries must be 16x24");
        const auto ink = std::count_if(e.pixels().begin(), e.pixels().end(), [](auto v) { return v != 0; });
        if (static_cast<double>(ink) < kMinAtlasInk * static_cast<double>(e.pixels().size()))
            throw Error("glyph atlas entry has less than 10% ink");
        if (std::any_of(e.pixels().begin(), e.pixels().end(), [](auto v) { return v != 0 && v != 255; }))
            throw Error("glyph atlas entries must be binary");

        const double mean = std::accumulate(e.pixels().begin(), e.pixels().end(), 0.0) / e.pixels().size();
        std::vector<double> c(e.pixels().size());
        double ss = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = e.pixels()[i] - mean;
            ss += c[i] * c[i];
        }
        centred_.push_back(std::move(c));
        norms_.push_back(std::sqrt(ss));
    }
}

const GlyphAtlas& GlyphAtlas::builtin() {
    static const GlyphAtlas atlas = [] {
        std::vector<GrayImage> entries;
        entries.reserve(kEntries);
        for (char s : kSymbols)
            entries.push_back(normalize_cell(font_cell(s)));
        return GlyphAtlas(std::move(entries));
    }();
    return atlas;
}

GlyphAtlas GlyphAtlas::from_netpbm(std::span<const std::uint8_t> bytes) {
    std::vector<GrayImage> entries;
    const std::size_t entry_size = write_netpbm(GrayImage(kGlyphWidth, kGlyphHeight)).size();
    for (std::size_t i = 0; i < kEntries; ++i) {
        if (bytes.size() < (i + 1) * entry_size)
            throw TruncatedData("glyph atlas holds fewer than 36 entries");
        AnyImage img = read_netpbm(bytes.subspan(i * entry_size, entry_size));
        auto* gray = std::get_if<GrayImage>(&img);
        if (!gray)
            throw BadMagic("glyph atlas entries must be P5");
        entries.push_back(std::move(*gray));
    }
    return GlyphAtlas(std::move(entries));
}

std::vector<std::uint8_t> GlyphAtlas::to_netpbm() const {
    std::vector<std::uint8_t> out;
    for (const GrayImage& e : entries_) {
        const auto bytes = write_netpbm(e);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

const GrayImage& GlyphAtlas::glyph(char symbol) const { return entries_[symbol_index(symbol)]; }

std::optional<int> otsu_threshold(const GrayImage& img) {
    std::array<double, 256> hist{};
    for (auto v : img.pixels())
        ++hist[v];
    const double total = static_cast<double>(img.pixels().size());
    double sum_all = 0.0;
    for (int v = 0; v < 256; ++v)
        sum_all += v * hist[static_cast<std::size_t>(v)];

    std::optional<int> best;
    double best_var = 0.0;
    double w0 = 0.0;
    double sum0 = 0.0;
    for (int t = 0; t < 255; ++t) {
        w0 += hist[static_cast<std::size_t>(t)];
        sum0 += t * hist[static_cast<std::size_t>(t)];
        const double w1 = total - w0;
        if (w0 == 0.0 || w1 == 0.0)
            continue;
        const double m0 = sum0 / w0;
        const double m1 = (sum_all - sum0) / w1;
        const double var = w0 * w1 * (m0 - m1) * (m0 - m1);
        if (!best || var > best_var) {
            best = t;
            best_var = var;
        }
    }
    return best;
}

GrayImage binarize_otsu(const GrayImage& img) {
    GrayImage out(img.width(), img.height(), 0);
    const auto t = otsu_threshold(img);
    if (!t)
        return out;
    const auto dark = std::count_if(img.pixels().begin(), img.pixels().end(), [&](auto v) { return v <= *t; });
    const auto light = static_cast<std::ptrdiff_t>(img.pixels().size()) - dark;
    const bool ink_is_dark = dark <= light;
    const auto src = img.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = ((src[i] <= *t) == ink_is_dark) ? 255 : 0;
    return out;
}

GrayImage clear_border_ink(const GrayImage& binary) {
    std::vector<int> labels;
    const auto comps = ink_components(binary, &labels);
    GrayImage out = binary;
    auto dst = out.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (labels[i] && comps[static_cast<std::size_t>(labels[i] - 1)].touches_border)
            dst[i] = 0;
    return out;
}

std::vector<BBox> segment_glyphs(const GrayImage& binary) {
    const auto comps = ink_components(binary);
    int tallest = 0;
    for (const auto& c : comps)
        tallest = std::max(tallest, c.box.h);

    std::vector<BBox> boxes;
    for (const auto& c : comps) {
        if (c.area < kMinGlyphArea || c.box.h < kMinGlyphHeightRatio * tallest)
            continue;
        boxes.push_back(c.box);
    }
    if (boxes.empty())
        throw NoGlyphs("no glyph-sized ink components");
    std::sort(boxes.begin(), boxes.end(), [](const BBox& a, const BBox& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return boxes;
}

GlyphMatch classify_glyph(const GrayImage& glyph, const GlyphAtlas& atlas) {
    const auto px = glyph.pixels();
    if (std::none_of(px.begin(), px.end(), [](auto v) { return v >= 128; }))
        throw BlankGlyph("glyph has no ink");

    const GrayImage norm = resize_bilinear(glyph, kGlyphWidth, kGlyphHeight);
    const auto g = norm.pixels();
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / g.size();
    std::vector<double> centred(g.size());
    double ss = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        centred[i] = g[i] - mean;
        ss += centred[i] * centred[i];
    }
    const double gnorm = std::sqrt(ss);

    GlyphMatch best;
    best.score = -1.0;
    for (std::size_t k = 0; k < GlyphAtlas::kEntries; ++k) {
        double ncc = 0.0;
        const double denom = gnorm * atlas.norm(k);
        if (denom > 0.0) {
            const auto a = atlas.centred(k);
            double dot = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                dot += a[i] * centred[i];
            ncc = std::clamp(dot / denom, -1.0, 1.0);
        }
        const double score = (ncc + 1.0) / 2.0;
        if (score > best.score) {
            best.score = score;
            best.symbol = kSymbols[k];
        }
    }
    return best;
}

Reading recognize(const GrayImage& plate, const GlyphAtlas& atlas) {
    if (plate.width() < 8 || plate.height() < 4)
        throw TooSmall("plate must be at least 8x4 to recognize");
    // Border-touching ink is usually frame background around the plate; when
    // it is all there is (a crop cut through the glyphs), keep it.
    GrayImage binary = binarize_otsu(plate);
    const GrayImage cleared = clear_border_ink(binary);
    std::vector<BBox> boxes;
    try {
        boxes = segment_glyphs(cleared);
        binary = cleared;
    } catch (const NoGlyphs&) {
        boxes = segment_glyphs(binary);
    }
    Reading reading;
    for (const BBox& box : boxes) {
        const GlyphMatch m = classify_glyph(crop(binary, box), atlas);
        reading.raw_text.push_back(m.symbol);
        reading.glyph_scores.push_back(m.score);
    }
    reading.confidence = std::accumulate(reading.glyph_scores.begin(), reading.glyph_scores.end(), 0.0) /
                         static_cast<double>(reading.glyph_scores.size());
    return reading;
}

std::vector<RecognitionCandidate> recognize_candidates(const GrayImage& plate, const Ocr& ocr,
                                                       const AnalogTable& table) {
    std::vector<RecognitionCandidate> out;
    for (const VariantImage& v : expand(plate)) {
        Reading reading;
        try {
            reading = ocr(v.image);
        } catch (const NoGlyphs&) {
            continue;
        }
        RecognitionCandidate cand{reading.raw_text, std::nullopt, reading.confidence, v.variant};
        if (auto text = try_normalize(reading.raw_text))
            cand.corrected_text = correct(*text, table).corrected.str();
        out.push_back(std::move(cand));
    }
    if (out.empty())
        throw NoGlyphs("no transformer variant produced glyphs");
    std::stable_sort(out.begin(), out.end(), [](const RecognitionCandidate& a, const RecognitionCandidate& b) {
        if (a.corrected_text.has_value() != b.corrected_text.has_value())
            return a.corrected_text.has_value();
        return a.confidence > b.confidence;
    });
    return out;
}

std::vector<RecognitionCandidate> recognize_candidates(const GrayImage& plate, const GlyphAtlas& atlas,
                                                       const AnalogTable& table) {
    return recognize_candidates(
        plate, [&atlas](const GrayImage& img) { return recognize(img, atlas); }, table);
}

}  // namespace lpr
