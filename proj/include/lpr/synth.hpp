#pragma once

// Synthetic ground truth: plates rendered with the built-in font, composited
// into moving or parked scenes, degraded, and written to disk with manifests
// and truth files.

#include "lpr/enhancer.hpp"
#include "lpr/font.hpp"
#include "lpr/image.hpp"
#include "lpr/plate_format.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lpr {

inline constexpr int kPlateMargin = 8;
inline constexpr int kGlyphSpacing = 4;
inline constexpr int kPlateHeight = kGlyphHeight + 2 * kPlateMargin;

/// Black glyphs on white, 8 px margin, 4 px between glyphs.
/// Size: (16 + 16 n + 4 (n - 1)) x 40.
GrayImage render_plate(const PlateText& text);

struct Waypoint {
    int frame_index = 0;
    double cx = 0.0;  // plate centre
    double cy = 0.0;
};

struct SceneSpec {
    PlateText plate_text;
    int frame_w = 384;
    int frame_h = 216;
    int n_frames = 40;
    std::vector<Waypoint> path;
    double plate_rotation_deg = 0.0;
    DegradeSpec degrade;
    int presence_first = 0;  // plate visible in [presence_first, presence_last)
    int presence_last = 0;
    std::uint64_t background_seed = 0;

    /// Throws SpecInvalid.
    void validate() const;
    /// Linear interpolation between waypoints, held constant outside them.
    std::pair<double, double> centre_at(int frame_index) const;
};

struct GroundTruth {
    std::string plate_text;
    int presence_first = 0;
    int presence_last = 0;
    std::vector<std::optional<BBox>> boxes;  // one entry per frame
};

struct Scene {
    std::vector<GrayImage> frames;
    GroundTruth truth;
};

/// Paints `plate`, rotated about its centre, onto `frame` and returns the
/// bounding box of the painted pixels.
BBox composite_plate(GrayImage& frame, const GrayImage& plate, double cx, double cy, double rotation_deg);

Scene make_scene(const SceneSpec& spec);

struct DegradeTier {
    std::string name;
    DegradeSpec spec;
    double max_rotation_deg = 0.0;

    static DegradeTier mild();
    static DegradeTier harsh();
    /// "mild" or "harsh"; throws SpecInvalid otherwise.
    static DegradeTier named(const std::string& name);
};

struct CorpusEntry {
    std::string video_id;
    std::string plate_text;
    std::string tier;
    std::filesystem::path manifest;
    std::filesystem::path truth;
};

/// Seeded stream used by the generator. Only raw mt19937_64 output is
/// consumed (no std distributions) so corpora match across standard libraries.
class SynthRng {
public:
    explicit SynthRng(std::uint64_t seed);
    std::uint64_t next();
    int uniform_int(int lo, int hi);  // inclusive
    double uniform_real(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

/// Uniform over the 10-character form: 2 letters, 2 digits, 2 letters, 4 digits.
PlateText random_plate(SynthRng& rng);

/// Scene parameters the corpus generator would draw for one plate and tier.
SceneSpec random_scene(SynthRng& rng, const PlateText& plate, const DegradeTier& tier);

/// Writes one directory per (plate, tier) holding P5 frames, manifest.json
/// and truth.json, plus corpus.json indexing them all. Throws IoFailure.
std::vector<CorpusEntry> gen_corpus(int n_plates, std::uint64_t seed, std::span<const DegradeTier> tiers,
                                    const std::filesystem::path& out_dir);

void save_truth(const std::filesystem::path& path, const GroundTruth& truth);
GroundTruth load_truth(const std::filesystem::path& path);
std::vector<CorpusEntry> load_corpus_index(const std::filesystem::path& out_dir);

}  // namespace lpr
