#include "lpr/synth.hpp"

#include "lpr/errors.hpp"
#include "lpr/font.hpp"
#include "lpr/imaging.hpp"
#include "lpr/netpbm.hpp"
#include "lpr/video.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numbers>

namespace lpr {

namespace {

using nlohmann::json;

constexpr int kBackground = 128;
constexpr int kTextureCell = 16;
constexpr double kTextureAmplitude = 4.0;
constexpr int kCorpusFps = 25;
constexpr int kCameraCount = 5;

// Half extents of a w x h rectangle rotated by `deg`.
std::pair<double, double> rotated_half_extents(int w, int h, double deg) {
    const double t = deg * std::numbers::pi / 180.0;
    const double c = std::abs(std::cos(t));
    const double s = std::abs(std::sin(t));
    return {(w * c + h * s) / 2.0, (w * s + h * c) / 2.0};
}

// Flat gray with a smooth, faint random texture (bilinear over a coarse grid).
GrayImage textured_background(int w, int h, std::uint64_t seed) {
    SynthRng rng(seed);
    const int gw = w / kTextureCell + 2;
    const int gh = h / kTextureCell + 2;
    std::vector<double> grid(static_cast<std::size_t>(gw) * static_cast<std::size_t>(gh));
    for (auto& g : grid)
        g = rng.uniform_real(-kTextureAmplitude, kTextureAmplitude);
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        const double gy = static_cast<double>(y) / kTextureCell;
        const int y0 = static_cast<int>(gy);
        const double fy = gy - y0;
        for (int x = 0; x < w; ++x) {
            const double gx = static_cast<double>(x) / kTextureCell;
            const int x0 = static_cast<int>(gx);
            const double fx = gx - x0;
            auto at = [&](int i, int j) { return grid[static_cast<std::size_t>(j) * gw + i]; };
            const double top = at(x0, y0) + (at(x0 + 1, y0) - at(x0, y0)) * fx;
            const double bot = at(x0, y0 + 1) + (at(x0 + 1, y0 + 1) - at(x0, y0 + 1)) * fx;
            out.at(x, y) = static_cast<std::uint8_t>(std::lround(kBackground + top + (bot - top) * fy));
        }
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw IoFailure("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out)
        throw IoFailure("write failed for " + path.string());
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoFailure("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SpecInvalid("bad json in " + path.string() + ": " + e.what());
    }
}

}  // namespace

GrayImage render_plate(const PlateText& text) {
    const int n = static_cast<int>(text.size());
    const int width = 2 * kPlateMargin + n * kGlyphWidth + (n - 1) * kGlyphSpacing;
    GrayImage plate(width, kPlateHeight, 255);
    for (int i = 0; i < n; ++i) {
        const GrayImage cell = font_cell(text[static_cast<std::size_t>(i)]);
        const int ox = kPlateMargin + i * (kGlyphWidth + kGlyphSpacing);
        for (int y = 0; y < kGlyphHeight; ++y)
            for (int x = 0; x < kGlyphWidth; ++x)
                if (cell.at(x, y))
                    plate.at(ox + x, kPlateMargin + y) = 0;
    }
    return plate;
}

BBox composite_plate(GrayImage& frame, const GrayImage& plate, double cx, double cy, double rotation_deg) {
    const int w = plate.width();
    const int h = plate.height();
    // Integer placement so an unrotated plate lands pixel-for-pixel.
    const int tx = static_cast<int>(std::lround(cx - w / 2.0));
    const int ty = static_cast<int>(std::lround(cy - h / 2.0));
    const double pcx = (w - 1) / 2.0;
    const double pcy = (h - 1) / 2.0;
    const double pivot_x = tx + pcx;
    const double pivot_y = ty + pcy;

    const double t = rotation_deg * std::numbers::pi / 180.0;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const auto [hx, hy] = rotated_half_extents(w, h, rotation_deg);

    const int x_lo = std::max(0, static_cast<int>(std::floor(pivot_x - hx)) - 1);
    const int x_hi = std::min(frame.width() - 1, static_cast<int>(std::ceil(pivot_x + hx)) + 1);
    const int y_lo = std::max(0, static_cast<int>(std::floor(pivot_y - hy)) - 1);
    const int y_hi = std::min(frame.height() - 1, static_cast<int>(std::ceil(pivot_y + hy)) + 1);

    int bx0 = frame.width(), by0 = frame.height(), bx1 = -1, by1 = -1;
    for (int y = y_lo; y <= y_hi; ++y) {
        const double dy = y - pivot_y;
        for (int x = x_lo; x <= x_hi; ++x) {
            const double dx = x - pivot_x;
            const double u = pcx + dx * c - dy * s;
            const double v = pcy + dx * s + dy * c;
            if (u < -0.5 || v < -0.5 || u >= w - 0.5 || v >= h - 0.5)
                continue;
            frame.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(sample_bilinear(plate, u, v)), 0L, 255L));
            bx0 = std::min(bx0, x);
            by0 = std::min(by0, y);
            bx1 = std::max(bx1, x);
            by1 = std::max(by1, y);
        }
    }
    if (bx1 < 0)
        throw SpecInvalid("plate lies outside the frame");
    return BBox{bx0, by0, bx1 - bx0 + 1, by1 - by0 + 1};
}

void SceneSpec::validate() const {
    if (frame_w < 1 || frame_h < 1 || n_frames < 1)
        throw SpecInvalid("scene needs positive frame size and frame count");
    if (!(presence_first >= 0 && presence_first <= presence_last && presence_last <= n_frames))
        throw SpecInvalid("presence interval must lie within [0, n_frames)");
    if (path.empty())
        throw SpecInvalid("scene path needs at least one waypoint");
    if (!(plate_rotation_deg >= -12.0 && plate_rotation_deg <= 12.0))
        throw SpecInvalid("plate rotation must be within [-12, 12] degrees");
    degrade.validate();

    const GrayImage plate = render_plate(plate_text);
    const auto [hx, hy] = rotated_half_extents(plate.width(), plate.height(), plate_rotation_deg);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && path[i].frame_index <= path[i - 1].frame_index)
            throw SpecInvalid("waypoints must be strictly increasing in frame index");
        // Motion is linear between waypoints, so checking the waypoints covers the path.
        const Waypoint& p = path[i];
        if (p.cx - hx < 0.0 || p.cy - hy < 0.0 || p.cx + hx > frame_w - 1 || p.cy + hy > frame_h - 1)
            throw SpecInvalid("plate does not fit inside the frame at waypoint " + std::to_string(i));
    }
}

std::pair<double, double> SceneSpec::centre_at(int frame_index) const {
    if (frame_index <= path.front().frame_index)
        return {path.front().cx, path.front().cy};
    if (frame_index >= path.back().frame_index)
        return {path.back().cx, path.back().cy};
    auto next = std::upper_bound(path.begin(), path.end(), frame_index,
                                 [](int f, const Waypoint& w) { return f < w.frame_index; });
    auto prev = std::prev(next);
    const double t = static_cast<double>(frame_index - prev->frame_index) / (next->frame_index - prev->frame_index);
    return {prev->cx + (next->cx - prev->cx) * t, prev->cy + (next->cy - prev->cy) * t};
}

Scene make_scene(const SceneSpec& spec) {
    spec.validate();
    const GrayImage plate = render_plate(spec.plate_text);
    const GrayImage background = textured_background(spec.frame_w, spec.frame_h, spec.background_seed);

    Scene scene;
    scene.truth.plate_text = spec.plate_text.str();
    scene.truth.presence_first = spec.presence_first;
    scene.truth.presence_last = spec.presence_last;
    scene.truth.boxes.resize(static_cast<std::size_t>(spec.n_frames));
    scene.frames.reserve(static_cast<std::size_t>(spec.n_frames));

    for (int f = 0; f < spec.n_frames; ++f) {
        GrayImage frame = background;
        if (f >= spec.presence_first && f < spec.presence_last) {
            const auto [cx, cy] = spec.centre_at(f);
            scene.truth.boxes[static_cast<std::size_t>(f)] =
                composite_plate(frame, plate, cx, cy, spec.plate_rotation_deg);
        }
        DegradeSpec per_frame = spec.degrade;
        per_frame.seed = mix_seed(spec.degrade.seed, static_cast<std::uint64_t>(f));
        scene.frames.push_back(per_frame.neutral() ? std::move(frame) : degrade(frame, per_frame));
    }
    return scene;
}

DegradeTier DegradeTier::mild() {
    return DegradeTier{"mild", DegradeSpec{6.0, GaussianBlur{0.8}, 0.85, 0}, 6.0};
}

DegradeTier DegradeTier::harsh() {
    return DegradeTier{"harsh", DegradeSpec{14.0, MedianBlur{3}, 0.6, 0}, 12.0};
}

DegradeTier DegradeTier::named(const std::string& name) {
    if (name == "mild")
        return mild();
    if (name == "harsh")
        return harsh();
    throw SpecInvalid("unknown degradation tier '" + name + "'");
}

SynthRng::SynthRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SynthRng::next() { return engine_(); }

int SynthRng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

double SynthRng::uniform_real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
}

PlateText random_plate(SynthRng& rng) {
    std::string s;
    auto letter = [&] { s.push_back(static_cast<char>('A' + rng.uniform_int(0, 25))); };
    auto digit = [&] { s.push_back(static_cast<char>('0' + rng.uniform_int(0, 9))); };
    letter(), letter(), digit(), digit(), letter(), letter();
    for (int i = 0; i < 4; ++i)
        digit();
    return PlateText(std::move(s));
}

SceneSpec random_scene(SynthRng& rng, const PlateText& plate, const DegradeTier& tier) {
    SceneSpec spec{.plate_text = plate, .path = {}, .degrade = {}};
    const double mid_y = spec.frame_h / 2.0;
    const double y0 = mid_y + rng.uniform_real(-30.0, 30.0);
    const double y1 = std::clamp(y0 + rng.uniform_real(-10.0, 10.0), mid_y - 30.0, mid_y + 30.0);
    double x0 = rng.uniform_real(115.0, 125.0);
    double x1 = rng.uniform_real(259.0, 269.0);
    if (rng.uniform_int(0, 1) == 1)
        std::swap(x0, x1);
    spec.path = {Waypoint{0, x0, y0}, Waypoint{spec.n_frames - 1, x1, y1}};
    spec.plate_rotation_deg = rng.uniform_real(-tier.max_rotation_deg, tier.max_rotation_deg);
    spec.presence_first = rng.uniform_int(0, 6);
    spec.presence_last = spec.n_frames - rng.uniform_int(0, 6);
    spec.degrade = tier.spec;
    spec.degrade.seed = rng.next();
    spec.background_seed = rng.next();
    return spec;
}

void save_truth(const std::filesystem::path& path, const GroundTruth& truth) {
    json boxes = json::array();
    for (std::size_t f = 0; f < truth.boxes.size(); ++f) {
        if (const auto& b = truth.boxes[f])
            boxes.push_back({{"frame_index", f}, {"x", b->x}, {"y", b->y}, {"w", b->w}, {"h", b->h}});
    }
    write_json(path, json{{"plate_text", truth.plate_text},
                          {"presence", {truth.presence_first, truth.presence_last}},
                          {"n_frames", truth.boxes.size()},
                          {"boxes", std::move(boxes)}});
}

GroundTruth load_truth(const std::filesystem::path& path) {
    const json j = read_json(path);
    try {
        GroundTruth t;
        t.plate_text = j.at("plate_text").get<std::string>();
        t.presence_first = j.at("presence").at(0).get<int>();
        t.presence_last = j.at("presence").at(1).get<int>();
        t.boxes.resize(j.at("n_frames").get<std::size_t>());
        for (const auto& b : j.at("boxes"))
            t.boxes.at(b.at("frame_index").get<std::size_t>()) =
                BBox{b.at("x").get<int>(), b.at("y").get<int>(), b.at("w").get<int>(), b.at("h").get<int>()};
        return t;
    } catch (const std::exception& e) {
        throw SpecInvalid("bad truth file " + path.string() + ": " + e.what());
    }
}

std::vector<CorpusEntry> gen_corpus(int n_plates, std::uint64_t seed, std::span<const DegradeTier> tiers,
                                    const std::filesystem::path& out_dir) {
    if (n_plates < 1)
        throw SpecInvalid("corpus needs at least one plate");
    if (tiers.empty())
        throw SpecInvalid("corpus needs at least one degradation tier");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoFailure("cannot create " + out_dir.string() + ": " + ec.message());

    SynthRng rng(seed);
    std::vector<PlateText> plates;
    for (int i = 0; i < n_plates; ++i)
        plates.push_back(random_plate(rng));

    std::vector<CorpusEntry> entries;
    json index = json::array();
    for (int i = 0; i < n_plates; ++i) {
        for (const DegradeTier& tier : tiers) {
            const SceneSpec spec = random_scene(rng, plates[static_cast<std::size_t>(i)], tier);
            const std::string camera = "cam-" + std::to_string(rng.uniform_int(1, kCameraCount));
            char id[64];
            std::snprintf(id, sizeof id, "p%03d-%s", i, tier.name.c_str());
            const std::filesystem::path dir = out_dir / id;
            std::filesystem::create_directories(dir, ec);
            if (ec)
                throw IoFailure("cannot create " + dir.string() + ": " + ec.message());

            const Scene scene = make_scene(spec);
            VideoManifest manifest{id, camera, kCorpusFps, {}, std::nullopt};
            for (std::size_t f = 0; f < scene.frames.size(); ++f) {
                char name[32];
                std::snprintf(name, sizeof name, "frame_%04zu.pgm", f);
                write_netpbm_file(dir / name, scene.frames[f]);
                manifest.frames.emplace_back(dir / name);
            }
            save_manifest(dir / "manifest.json", manifest);
            save_truth(dir / "truth.json", scene.truth);

            entries.push_back(CorpusEntry{id, spec.plate_text.str(), tier.name, dir / "manifest.json", dir / "truth.json"});
            index.push_back({{"video_id", id},
                             {"plate_text", spec.plate_text.str()},
                             {"tier", tier.name},
                             {"manifest", std::string(id) + "/manifest.json"},
                             {"truth", std::string(id) + "/truth.json"}});
        }
    }
    write_json(out_dir / "corpus.json", index);
    return entries;
}

std::vector<CorpusEntry> load_corpus_index(const std::filesystem::path& out_dir) {
    const json j = read_json(out_dir / "corpus.json");
    std::vector<CorpusEntry> entries;
    try {
        for (const auto& e : j)
            entries.push_back(CorpusEntry{e.at("video_id").get<std::string>(), e.at("plate_text").get<std::string>(),
                                          e.at("tier").get<std::string>(), out_dir / e.at("manifest").get<std::string>(),
                                          out_dir / e.at("truth").get<std::string>()});
    } catch (const json::exception& e) {
        throw SpecInvalid("bad corpus index: " + std::string(e.what()));
    }
    return entries;
}

}  // namespace lpr
