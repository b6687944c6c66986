#include "lpr/video.hpp"

#include "lpr/errors.hpp"

#include <fstream>
#include <json.hpp>

namespace lpr {

using nlohmann::json;

VideoManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoFailure("cannot open manifest " + path.string());
    VideoManifest m;
    try {
        const json j = json::parse(in);
        m.video_id = j.at("video_id").get<std::string>();
        m.camera_id = j.at("camera_id").get<std::string>();
        m.fps = j.at("fps").get<int>();
        const auto base = path.parent_path();
        for (const auto& f : j.at("frames"))
            m.frames.push_back(base / f.get<std::string>());
        if (j.contains("start_epoch_s") && !j.at("start_epoch_s").is_null())
            m.start_epoch_s = j.at("start_epoch_s").get<double>();
    } catch (const json::exception& e) {
        throw SpecInvalid("bad manifest " + path.string() + ": " + e.what());
    }
    return m;
}

void save_manifest(const std::filesystem::path& path, const VideoManifest& manifest) {
    const auto base = path.parent_path();
    json frames = json::array();
    for (const auto& f : manifest.frames) {
        // Frames under the manifest directory are stored relative to it.
        const auto rel = f.lexically_relative(base);
        const bool under_base = !rel.empty() && *rel.begin() != "..";
        frames.push_back((under_base ? rel : f).generic_string());
    }
    json j{{"video_id", manifest.video_id},
           {"camera_id", manifest.camera_id},
           {"fps", manifest.fps},
           {"frames", std::move(frames)}};
    if (manifest.start_epoch_s)
        j["start_epoch_s"] = *manifest.start_epoch_s;

    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw IoFailure("cannot write manifest " + path.string());
    out << j.dump(2) << '\n';
    if (!out)
        throw IoFailure("write failed for manifest " + path.string());
}

}  // namespace lpr
