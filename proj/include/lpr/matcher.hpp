#pragma once

// Comparator between a target plate and recognized plates, the append-only
// JSONL detection store, and the CSV sighting report.

#include "lpr/image.hpp"
#include "lpr/recognizer.hpp"

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpr {

inline constexpr int kDefaultMatchThreshold = 2;

/// One recognized plate occurrence in one frame of one video.
struct Detection {
    std::string camera_id;
    std::string video_id;
    int frame_index = 0;
    double timestamp_s = 0.0;
    BBox box;
    std::vector<RecognitionCandidate> candidates;
    std::optional<std::string> best_text;

    friend bool operator==(const Detection&, const Detection&) = default;
};

struct MatchResult {
    Detection detection;
    int distance = 0;
    std::size_t matched_candidate = 0;
};

/// Positional mismatches over the common prefix plus the length difference.
int distance(std::string_view a, std::string_view b) noexcept;

/// Text a candidate is compared by: its corrected text, else its raw text
/// when that normalizes to a legal plate.
std::optional<std::string> comparable_text(const RecognitionCandidate& c);

/// Closest candidate of `det` when its distance is <= threshold. Ties go to
/// the more confident candidate, then the earlier one.
std::optional<MatchResult> match(std::string_view target, const Detection& det, int threshold = kDefaultMatchThreshold);

nlohmann::json to_json(const Detection& det);
/// Throws nlohmann::json exceptions on schema violations.
Detection detection_from_json(const nlohmann::json& j);

/// Appends one newline-terminated JSON line. Throws IoFailure.
void store_append(const std::filesystem::path& store, const Detection& det);
void store_append(const std::filesystem::path& store, std::span<const Detection> dets);

/// Every record in file order. Throws IoFailure (including for a missing
/// store) or MalformedRecord (1-based line number).
std::vector<Detection> store_read(const std::filesystem::path& store);

/// All matching detections, ordered by (video_id, timestamp_s).
std::vector<MatchResult> query(const std::filesystem::path& store, std::string_view target,
                               int threshold = kDefaultMatchThreshold);

inline constexpr std::string_view kReportHeader = "plate,timestamp_s,camera_id,video_id,frame_index,distance";

/// CSV text: header line plus one row per match, in input order.
std::string report(std::span<const MatchResult> matches);

}  // namespace lpr
