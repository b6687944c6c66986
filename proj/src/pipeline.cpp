#include "lpr/pipeline.hpp"

#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"
#include "lpr/netpbm.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace lpr {

namespace {

using nlohmann::json;

std::mutex g_log_mutex;

void warn(const std::string& msg) {
    std::lock_guard lock(g_log_mutex);
    std::cerr << "warning: " << msg << '\n';
}

json box_json(const BBox& b) { return {{"x", b.x}, {"y", b.y}, {"w", b.w}, {"h", b.h}}; }

void append_trace(const std::filesystem::path& path, std::span<const json> records) {
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw IoFailure("cannot open trace " + path.string());
    for (const json& r : records)
        out << r.dump() << '\n';
    if (!out)
        throw IoFailure("write to trace " + path.string() + " failed");
}

}  // namespace

void PipelineConfig::validate() const {
    detector.validate();
    if (match_threshold < 0)
        throw Error("match threshold must be non-negative");
    if (!(iou_min > 0.0 && iou_min <= 1.0))
        throw Error("iou_min must be in (0, 1]");
    if (!detect || !enhancer || !atlas || !analogs)
        throw Error("pipeline stages must all be set");
}

Enhancer make_enhancer(const std::string& name) {
    if (name == "builtin")
        return enhance;
    if (name == "none")
        return [](const GrayImage& img) { return img; };
    throw Error("unknown enhancer '" + name + "'");
}

std::vector<RecognitionCandidate> read_plate_region(const GrayImage& frame, const BBox& box,
                                                    const PipelineConfig& cfg) {
    const BBox roi = extend_roi(box, frame.width(), frame.height());
    const GrayImage plate = cfg.enhancer(crop(frame, roi));
    return recognize_candidates(plate, *cfg.atlas, *cfg.analogs);
}

VideoResult process_video(const VideoManifest& manifest, const PipelineConfig& cfg) {
    cfg.validate();
    VideoResult result;
    const double offset = manifest.start_epoch_s.value_or(0.0);

    // Frames are decoded lazily; only visited indices are read from disk.
    auto load = [&](int i) -> std::optional<GrayImage> {
        try {
            return read_gray_file(manifest.frames[static_cast<std::size_t>(i)]);
        } catch (const Error& e) {
            warn(manifest.video_id + " frame " + std::to_string(i) + ": " + e.what());
            ++result.skipped_frames;
            return std::nullopt;
        }
    };
    auto detect = [&](const GrayImage& frame) { return cfg.detect(frame, cfg.detector); };

    FrameCursor cursor(manifest.fps, cfg.iou_min);
    const int n = static_cast<int>(manifest.frames.size());
    std::vector<std::pair<SelectedFrame, GrayImage>> selected;
    while (cursor.frame_index() < n) {
        const int i = cursor.frame_index();
        auto frame = load(i);
        if (!frame) {
            cursor.skip();
            continue;
        }
        if (auto sel = cursor.observe(detect(*frame)))
            selected.emplace_back(std::move(*sel), std::move(*frame));
    }

    for (const auto& [sel, frame] : selected) {
        for (const PlateCandidate& cand : sel.candidates) {
            std::vector<RecognitionCandidate> reads;
            try {
                reads = read_plate_region(frame, cand.box, cfg);
            } catch (const Error& e) {
                warn(manifest.video_id + " frame " + std::to_string(sel.frame_index) + ": " + e.what());
                ++result.skipped_regions;
                continue;
            }
            Detection det;
            det.camera_id = manifest.camera_id;
            det.video_id = manifest.video_id;
            det.frame_index = sel.frame_index;
            det.timestamp_s = offset + static_cast<double>(sel.frame_index) / manifest.fps;
            det.box = cand.box;
            det.best_text = reads.front().corrected_text;
            det.candidates = std::move(reads);

            const RecognitionCandidate& top = det.candidates.front();
            result.trace.push_back(json{
                {"video_id", det.video_id},
                {"frame_index", det.frame_index},
                {"stages", {"select", "detect", "extend_roi", "crop", "enhance", "transform", "recognize", "correct"}},
                {"detector_box", box_json(cand.box)},
                {"detector_score", cand.score},
                {"roi", box_json(extend_roi(cand.box, frame.width(), frame.height()))},
                {"enhancer", cfg.enhancer_name},
                {"variants_read", det.candidates.size()},
                {"winning_variant", {{"rotation_deg", top.variant.rotation_deg}, {"crop_px", top.variant.crop_px}}},
                {"best_text", det.best_text ? json(*det.best_text) : json(nullptr)}});
            result.detections.push_back(std::move(det));
        }
    }
    return result;
}

std::size_t process(const VideoManifest& manifest, const PipelineConfig& cfg, const std::filesystem::path& store,
                    const std::filesystem::path* trace) {
    return process_all(std::span<const VideoManifest>(&manifest, 1), cfg, store, trace, 1);
}

std::size_t process_all(std::span<const VideoManifest> manifests, const PipelineConfig& cfg,
                        const std::filesystem::path& store, const std::filesystem::path* trace, unsigned threads) {
    cfg.validate();
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, manifests.size())));

    std::vector<std::optional<VideoResult>> results(manifests.size());
    std::vector<std::exception_ptr> errors(manifests.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < manifests.size(); i = next++) {
            try {
                results[i] = process_video(manifests[i], cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    // Single writer, manifest order: the store is identical for any thread count.
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::size_t written = 0;
    for (const auto& r : results) {
        store_append(store, r->detections);
        if (trace)
            append_trace(*trace, r->trace);
        written += r->detections.size();
    }
    return written;
}

}  // namespace lpr
