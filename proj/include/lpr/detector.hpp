#pragma once

#include "lpr/image.hpp"

#include <functional>
#include <vector>

namespace lpr {

struct PlateCandidate {
    BBox box;
    double score = 0.0;  // edge density inside the box, in [0, 1]

    friend bool operator==(const PlateCandidate&, const PlateCandidate&) = default;
};

struct DetectorConfig {
    int min_w = 40;
    int min_h = 12;
    double aspect_min = 2.0;
    double aspect_max = 6.0;
    int edge_threshold = 40;
    int max_candidates = 4;

    /// Throws Error when the invariants do not hold.
    void validate() const;
};

/// Any plate localizer: frame in, scored boxes out (best first).
using Detector = std::function<std::vector<PlateCandidate>(const GrayImage&, const DetectorConfig&)>;

/// Horizontal pixels added on each side of a detected plate before cropping.
inline constexpr int kRoiExtension = 20;

/// Edge-density localizer: horizontal gradient, threshold, 9x3 closing,
/// connected components, size/aspect filter, score by edge fraction.
std::vector<PlateCandidate> detect_plates(const GrayImage& frame, const DetectorConfig& cfg);

/// Widens the box by kRoiExtension on the left and right, clamped to the frame.
BBox extend_roi(const BBox& box, int frame_w, int frame_h);

}  // namespace lpr
