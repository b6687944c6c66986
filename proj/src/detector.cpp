#include "lpr/detector.hpp"

#include "lpr/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace lpr {

namespace {

constexpr int kCloseW = 9;
constexpr int kCloseH = 3;
// Fragments on the same text line closer than this are one plate.
constexpr int kMergeGap = 2 * kCloseW;

using Mask = std::vector<std::uint8_t>;

// Separable max (dilate) or min (erode) over a kw x kh rectangle. Erosion
// treats out-of-frame pixels as set so the frame border is not eaten away.
Mask morph(const Mask& in, int w, int h, int kw, int kh, bool dilate) {
    const int rx = kw / 2;
    const int ry = kh / 2;
    const std::uint8_t outside = dilate ? 0 : 1;
    Mask tmp(in.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t acc = dilate ? 0 : 1;
            for (int dx = -rx; dx <= rx; ++dx) {
                const int xx = x + dx;
                const std::uint8_t v = (xx < 0 || xx >= w) ? outside : in[static_cast<std::size_t>(y) * w + xx];
                acc = dilate ? std::max(acc, v) : std::min(acc, v);
            }
            tmp[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    Mask out(in.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t acc = dilate ? 0 : 1;
            for (int dy = -ry; dy <= ry; ++dy) {
                const int yy = y + dy;
                const std::uint8_t v = (yy < 0 || yy >= h) ? outside : tmp[static_cast<std::size_t>(yy) * w + x];
                acc = dilate ? std::max(acc, v) : std::min(acc, v);
            }
            out[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    return out;
}

// Bounding boxes of the 8-connected components of a mask.
std::vector<BBox> component_boxes(const Mask& mask, int w, int h) {
    std::vector<BBox> boxes;
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::vector<int> stack;
    for (int start = 0; start < w * h; ++start) {
        if (!mask[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        int x0 = w, y0 = h, x1 = -1, y1 = -1;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int px = p % w;
            const int py = p / w;
            x0 = std::min(x0, px);
            x1 = std::max(x1, px);
            y0 = std::min(y0, py);
            y1 = std::max(y1, py);
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = px + dx;
                    const int ny = py + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h)
                        continue;
                    const auto q = static_cast<std::size_t>(ny) * w + nx;
                    if (mask[q] && !seen[q]) {
                        seen[q] = 1;
                        stack.push_back(static_cast<int>(q));
                    }
                }
            }
        }
        boxes.push_back(BBox{x0, y0, x1 - x0 + 1, y1 - y0 + 1});
    }
    return boxes;
}

// Joins boxes that share most of their height and are at most kMergeGap
// apart horizontally, repeating until nothing changes.
std::vector<BBox> merge_line_fragments(std::vector<BBox> boxes) {
    auto joinable = [](const BBox& a, const BBox& b) {
        const int overlap = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
        const int gap = std::max(a.x, b.x) - std::min(a.right(), b.right());
        return 2 * overlap >= std::min(a.h, b.h) && gap <= kMergeGap;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < boxes.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < boxes.size(); ++j) {
                if (!joinable(boxes[i], boxes[j]))
                    continue;
                const BBox& a = boxes[i];
                const BBox& b = boxes[j];
                const int x0 = std::min(a.x, b.x);
                const int y0 = std::min(a.y, b.y);
                boxes[i] = BBox{x0, y0, std::max(a.right(), b.right()) - x0, std::max(a.bottom(), b.bottom()) - y0};
                boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
        }
    }
    return boxes;
}

}  // namespace

void DetectorConfig::validate() const {
    if (min_w < 8 || min_h < 4)
        throw Error("detector minimum size must be at least 8x4");
    if (!(aspect_min >= 1.0 && aspect_min < aspect_max))
        throw Error("detector aspect range must satisfy 1 <= min < max");
    if (max_candidates < 1)
        throw Error("detector max_candidates must be at least 1");
}

std::vector<PlateCandidate> detect_plates(const GrayImage& frame, const DetectorConfig& cfg) {
    cfg.validate();
    const int w = frame.width();
    const int h = frame.height();
    if (w < cfg.min_w || h < cfg.min_h)
        return {};

    Mask edges(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            edges[static_cast<std::size_t>(y) * w + x] =
                std::abs(frame.clamped(x + 1, y) - frame.clamped(x - 1, y)) >= cfg.edge_threshold;

    const Mask closed = morph(morph(edges, w, h, kCloseW, kCloseH, true), w, h, kCloseW, kCloseH, false);

    // Integral image of the raw edge mask for O(1) box scoring.
    std::vector<long long> integral(static_cast<std::size_t>(w + 1) * static_cast<std::size_t>(h + 1), 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            integral[static_cast<std::size_t>(y + 1) * (w + 1) + x + 1] =
                edges[static_cast<std::size_t>(y) * w + x] + integral[static_cast<std::size_t>(y) * (w + 1) + x + 1] +
                integral[static_cast<std::size_t>(y + 1) * (w + 1) + x] - integral[static_cast<std::size_t>(y) * (w + 1) + x];
    auto edge_count = [&](const BBox& b) {
        auto at = [&](int x, int y) { return integral[static_cast<std::size_t>(y) * (w + 1) + x]; };
        return at(b.right(), b.bottom()) - at(b.x, b.bottom()) - at(b.right(), b.y) + at(b.x, b.y);
    };

    std::vector<PlateCandidate> out;
    for (const BBox& box : merge_line_fragments(component_boxes(closed, w, h))) {
        if (box.w < cfg.min_w || box.h < cfg.min_h)
            continue;
        const double aspect = static_cast<double>(box.w) / box.h;
        if (aspect < cfg.aspect_min || aspect > cfg.aspect_max)
            continue;
        out.push_back(PlateCandidate{box, static_cast<double>(edge_count(box)) / static_cast<double>(box.area())});
    }
    std::sort(out.begin(), out.end(), [](const PlateCandidate& a, const PlateCandidate& b) {
        if (a.score != b.score)
            return a.score > b.score;
        if (a.box.y != b.box.y)
            return a.box.y < b.box.y;
        return a.box.x < b.box.x;
    });
    if (out.size() > static_cast<std::size_t>(cfg.max_candidates))
        out.resize(static_cast<std::size_t>(cfg.max_candidates));
    return out;
}

BBox extend_roi(const BBox& box, int frame_w, [[maybe_unused]] int frame_h) {
    const int left = std::max(0, box.x - kRoiExtension);
    const int right = std::min(frame_w, box.right() + kRoiExtension);
    return BBox{left, box.y, right - left, box.h};
}

}  // namespace lpr
