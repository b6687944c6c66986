#pragma once

// A "video" on disk is a directory of P5/P6 frames plus a JSON manifest:
//   {"video_id", "camera_id", "fps", "frames": [relative paths], "start_epoch_s"?}

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lpr {

struct VideoManifest {
    std::string video_id;
    std::string camera_id;
    int fps = 25;
    std::vector<std::filesystem::path> frames;  // resolved against the manifest's directory on load
    std::optional<double> start_epoch_s;
};

/// Throws IoFailure, or SpecInvalid for a manifest that does not follow the schema.
VideoManifest load_manifest(const std::filesystem::path& path);

/// Frame paths are written relative to the manifest's directory.
void save_manifest(const std::filesystem::path& path, const VideoManifest& manifest);

}  // namespace lpr
