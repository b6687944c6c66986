#pragma once

// End-to-end orchestration: select frames -> detect plates -> extend ROI ->
// crop -> enhance -> transformer variants -> recognize and correct ->
// detection store.

#include "lpr/detector.hpp"
#include "lpr/enhancer.hpp"
#include "lpr/matcher.hpp"
#include "lpr/recognizer.hpp"
#include "lpr/selector.hpp"
#include "lpr/video.hpp"

#include <cstddef>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lpr {

struct PipelineConfig {
    DetectorConfig detector;
    double iou_min = kDefaultIouMin;
    int match_threshold = kDefaultMatchThreshold;
    std::string enhancer_name = "builtin";
    Detector detect = detect_plates;
    Enhancer enhancer = enhance;
    const GlyphAtlas* atlas = &GlyphAtlas::builtin();
    const AnalogTable* analogs = &AnalogTable::standard();

    /// Throws Error on invalid settings.
    void validate() const;
};

/// "builtin" (median, stretch, resize) or "none" (pass-through). Throws Error otherwise.
Enhancer make_enhancer(const std::string& name);

/// Stage chain for one detected box: extend_roi, crop, enhance, then
/// recognize_candidates. Throws the stage's error when the region is unreadable.
std::vector<RecognitionCandidate> read_plate_region(const GrayImage& frame, const BBox& box,
                                                    const PipelineConfig& cfg);

struct VideoResult {
    std::vector<Detection> detections;
    std::vector<nlohmann::json> trace;  // one record per detection, same order
    std::size_t skipped_frames = 0;
    std::size_t skipped_regions = 0;
};

/// Runs the pipeline over one video. Unreadable frames and unreadable plate
/// regions are logged to stderr and skipped.
VideoResult process_video(const VideoManifest& manifest, const PipelineConfig& cfg);

/// Processes one video and appends its detections to `store`. Returns the
/// number written. Throws IoFailure when the store cannot be written.
std::size_t process(const VideoManifest& manifest, const PipelineConfig& cfg, const std::filesystem::path& store,
                    const std::filesystem::path* trace = nullptr);

/// Processes videos concurrently (up to `threads` at a time) and appends
/// results to `store` in manifest order through a single writer.
std::size_t process_all(std::span<const VideoManifest> manifests, const PipelineConfig& cfg,
                        const std::filesystem::path& store, const std::filesystem::path* trace = nullptr,
                        unsigned threads = 0);

}  // namespace lpr
