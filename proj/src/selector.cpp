#include "lpr/selector.hpp"

#include "lpr/errors.hpp"

#include <algorithm>
#include <string>

namespace lpr {

int stride_for(int fps) {
    if (fps < 2)
        throw BadFps("fps must be at least 2, got " + std::to_string(fps));
    return fps / 2;
}

bool is_stationary(const BBox& loc, const BBox& prev_loc, double iou_min) {
    return iou(loc, prev_loc) >= iou_min;
}

FrameCursor::FrameCursor(int fps, double iou_min) : fps_(fps), stride_(stride_for(fps)), iou_min_(iou_min) {
    if (!(iou_min > 0.0 && iou_min <= 1.0))
        throw Error("iou_min must be in (0, 1]");
}

std::optional<SelectedFrame> FrameCursor::observe(std::vector<PlateCandidate> candidates) {
    const int index = f_no_;
    f_no_ += stride_;
    if (candidates.empty()) {
        prev_loc_.reset();
        return std::nullopt;
    }
    const auto best = std::max_element(candidates.begin(), candidates.end(),
                                       [](const PlateCandidate& a, const PlateCandidate& b) { return a.score < b.score; });
    const bool moved = !prev_loc_ || !is_stationary(best->box, *prev_loc_, iou_min_);
    prev_loc_ = best->box;
    if (!moved)
        return std::nullopt;
    return SelectedFrame{index, std::move(candidates), static_cast<double>(index) / fps_};
}

std::vector<SelectedFrame> select_frames(int frame_count, int fps, const FrameSource& load,
                                         const FrameDetector& detect, double iou_min) {
    FrameCursor cursor(fps, iou_min);
    std::vector<SelectedFrame> out;
    while (cursor.frame_index() < frame_count) {
        std::optional<GrayImage> frame = load(cursor.frame_index());
        if (!frame) {
            cursor.skip();
            continue;
        }
        if (auto selected = cursor.observe(detect(*frame)))
            out.push_back(std::move(*selected));
    }
    return out;
}

std::vector<SelectedFrame> select_frames(std::span<const GrayImage> frames, int fps, const FrameDetector& detect,
                                         double iou_min) {
    if (frames.empty())
        throw Error("select_frames needs at least one frame");
    return select_frames(
        static_cast<int>(frames.size()), fps,
        [&](int i) -> std::optional<GrayImage> { return frames[static_cast<std::size_t>(i)]; }, detect, iou_min);
}

}  // namespace lpr
