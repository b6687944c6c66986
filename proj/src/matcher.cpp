#include "lpr/matcher.hpp"

#include "lpr/errors.hpp"
#include "lpr/plate_format.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lpr {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

int distance(std::string_view a, std::string_view b) noexcept {
    const std::size_t common = std::min(a.size(), b.size());
    int d = 0;
    for (std::size_t i = 0; i < common; ++i)
        d += a[i] != b[i];
    return d + static_cast<int>(std::max(a.size(), b.size()) - common);
}

std::optional<std::string> comparable_text(const RecognitionCandidate& c) {
    if (c.corrected_text)
        return c.corrected_text;
    if (auto t = try_normalize(c.raw_text))
        return t->str();
    return std::nullopt;
}

std::optional<MatchResult> match(std::string_view target, const Detection& det, int threshold) {
    if (threshold < 0)
        throw Error("match threshold must be non-negative");
    std::optional<std::size_t> best;
    int best_d = 0;
    for (std::size_t i = 0; i < det.candidates.size(); ++i) {
        const auto text = comparable_text(det.candidates[i]);
        if (!text)
            continue;
        const int d = distance(target, *text);
        if (!best || d < best_d ||
            (d == best_d && det.candidates[i].confidence > det.candidates[*best].confidence)) {
            best = i;
            best_d = d;
        }
    }
    if (!best || best_d > threshold)
        return std::nullopt;
    return MatchResult{det, best_d, *best};
}

json to_json(const Detection& det) {
    json cands = json::array();
    for (const auto& c : det.candidates) {
        cands.push_back({{"raw", c.raw_text},
                         {"corrected", c.corrected_text ? json(*c.corrected_text) : json(nullptr)},
                         {"confidence", c.confidence},
                         {"rotation_deg", c.variant.rotation_deg},
                         {"crop_px", c.variant.crop_px}});
    }
    return json{{"camera_id", det.camera_id},
                {"video_id", det.video_id},
                {"frame_index", det.frame_index},
                {"timestamp_s", det.timestamp_s},
                {"box", {{"x", det.box.x}, {"y", det.box.y}, {"w", det.box.w}, {"h", det.box.h}}},
                {"candidates", std::move(cands)},
                {"best_text", det.best_text ? json(*det.best_text) : json(nullptr)}};
}

Detection detection_from_json(const json& j) {
    Detection det;
    det.camera_id = j.at("camera_id").get<std::string>();
    det.video_id = j.at("video_id").get<std::string>();
    det.frame_index = j.at("frame_index").get<int>();
    det.timestamp_s = j.at("timestamp_s").get<double>();
    const json& box = j.at("box");
    det.box = BBox{box.at("x").get<int>(), box.at("y").get<int>(), box.at("w").get<int>(), box.at("h").get<int>()};
    for (const json& c : j.at("candidates")) {
        RecognitionCandidate cand;
        cand.raw_text = c.at("raw").get<std::string>();
        if (!c.at("corrected").is_null())
            cand.corrected_text = c.at("corrected").get<std::string>();
        cand.confidence = c.at("confidence").get<double>();
        cand.variant = TransformVariant{c.at("rotation_deg").get<double>(), c.at("crop_px").get<int>()};
        det.candidates.push_back(std::move(cand));
    }
    if (!j.at("best_text").is_null())
        det.best_text = j.at("best_text").get<std::string>();
    return det;
}

void store_append(const std::filesystem::path& store, std::span<const Detection> dets) {
    std::ofstream out(store, std::ios::app | std::ios::binary);
    if (!out)
        throw IoFailure("cannot open store " + store.string() + " for append");
    for (const Detection& d : dets)
        out << to_json(d).dump() << '\n';
    out.flush();
    if (!out)
        throw IoFailure("write to store " + store.string() + " failed");
}

void store_append(const std::filesystem::path& store, const Detection& det) {
    store_append(store, std::span<const Detection>(&det, 1));
}

std::vector<Detection> store_read(const std::filesystem::path& store) {
    std::ifstream in(store, std::ios::binary);
    if (!in)
        throw IoFailure("cannot open store " + store.string());
    std::vector<Detection> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            out.push_back(detection_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw MalformedRecord(line_no, e.what());
        }
    }
    if (in.bad())
        throw IoFailure("read from store " + store.string() + " failed");
    return out;
}

std::vector<MatchResult> query(const std::filesystem::path& store, std::string_view target, int threshold) {
    std::vector<MatchResult> hits;
    for (const Detection& det : store_read(store))
        if (auto m = match(target, det, threshold))
            hits.push_back(std::move(*m));
    std::stable_sort(hits.begin(), hits.end(), [](const MatchResult& a, const MatchResult& b) {
        if (a.detection.video_id != b.detection.video_id)
            return a.detection.video_id < b.detection.video_id;
        return a.detection.timestamp_s < b.detection.timestamp_s;
    });
    return hits;
}

std::string report(std::span<const MatchResult> matches) {
    std::ostringstream out;
    out << kReportHeader << '\n';
    for (const MatchResult& m : matches) {
        const Detection& d = m.detection;
        const std::string plate = comparable_text(d.candidates.at(m.matched_candidate)).value_or("");
        char ts[64];
        std::snprintf(ts, sizeof ts, "%.2f", d.timestamp_s);
        out << csv_field(plate) << ',' << ts << ',' << csv_field(d.camera_id) << ',' << csv_field(d.video_id) << ','
            << d.frame_index << ',' << m.distance << '\n';
    }
    return out.str();
}

}  // namespace lpr
