#pragma once

// Frame selection: only every stride-th frame is handed to the detector, and
// a plate that has not moved since the previous visited frame is reported
// once rather than on every visit.

#include "lpr/detector.hpp"
#include "lpr/image.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lpr {

inline constexpr double kDefaultIouMin = 0.7;

/// floor(fps / 2). Any run of stride + 1 consecutive frames contains a
/// visited index. Throws BadFps when fps < 2.
int stride_for(int fps);

bool is_stationary(const BBox& loc, const BBox& prev_loc, double iou_min);

struct SelectedFrame {
    int frame_index = 0;
    std::vector<PlateCandidate> candidates;
    double timestamp_s = 0.0;
};

/// Sequential selection state for one video.
class FrameCursor {
public:
    explicit FrameCursor(int fps, double iou_min = kDefaultIouMin);

    int fps() const noexcept { return fps_; }
    int stride() const noexcept { return stride_; }
    int frame_index() const noexcept { return f_no_; }
    const std::optional<BBox>& prev_loc() const noexcept { return prev_loc_; }

    /// Feeds the detections of the current frame and advances by one stride.
    /// Returns the frame to emit, if any.
    std::optional<SelectedFrame> observe(std::vector<PlateCandidate> candidates);

    /// Advances past an unusable frame without touching prev_loc.
    void skip() noexcept { f_no_ += stride_; }

private:
    int fps_;
    int stride_;
    double iou_min_;
    int f_no_ = 0;
    std::optional<BBox> prev_loc_;
};

/// Loads frame `i`; returning nullopt marks the frame unreadable.
using FrameSource = std::function<std::optional<GrayImage>(int)>;
using FrameDetector = std::function<std::vector<PlateCandidate>(const GrayImage&)>;

std::vector<SelectedFrame> select_frames(int frame_count, int fps, const FrameSource& load,
                                         const FrameDetector& detect, double iou_min = kDefaultIouMin);

std::vector<SelectedFrame> select_frames(std::span<const GrayImage> frames, int fps, const FrameDetector& detect,
                                         double iou_min = kDefaultIouMin);

}  // namespace lpr
