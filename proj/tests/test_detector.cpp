#include <doctest.h>

#include "lpr/detector.hpp"
#include "lpr/errors.hpp"
#include "lpr/synth.hpp"

using namespace lpr;

TEST_CASE("uniform frame has no candidates") {
    CHECK(detect_plates(GrayImage(320, 240, 128), DetectorConfig{}).empty());
    CHECK(detect_plates(GrayImage(20, 8, 128), DetectorConfig{}).empty());
}

TEST_CASE("config validation") {
    DetectorConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.min_w = 4;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = DetectorConfig{};
    cfg.aspect_min = 6.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = DetectorConfig{};
    cfg.max_candidates = 0;
    CHECK_THROWS_AS(detect_plates(GrayImage(100, 100), cfg), Error);
}

TEST_CASE("one rendered plate is found") {
    GrayImage frame(384, 216, 128);
    const BBox truth = composite_plate(frame, render_plate(PlateText("TS09UB8902")), 190, 100, 0.0);
    const auto cands = detect_plates(frame, DetectorConfig{});
    REQUIRE_FALSE(cands.empty());
    CHECK(iou(cands.front().box, truth) >= 0.5);
    for (const auto& c : cands) {
        CHECK(c.box.inside(frame.width(), frame.height()));
        const double aspect = static_cast<double>(c.box.w) / c.box.h;
        CHECK(aspect >= 2.0);
        CHECK(aspect <= 6.0);
        CHECK(c.score >= 0.0);
        CHECK(c.score <= 1.0);
    }
}

TEST_CASE("plates in degraded scenes are found") {
    SynthRng rng(3);
    const DegradeTier tier = DegradeTier::mild();
    int found = 0;
    for (int i = 0; i < 10; ++i) {
        const SceneSpec spec = random_scene(rng, random_plate(rng), tier);
        const Scene scene = make_scene(spec);
        const int f = (spec.presence_first + spec.presence_last) / 2;
        const auto cands = detect_plates(scene.frames[static_cast<std::size_t>(f)], DetectorConfig{});
        found += !cands.empty() && iou(cands.front().box, *scene.truth.boxes[static_cast<std::size_t>(f)]) >= 0.5;
    }
    CHECK(found == 10);
}

TEST_CASE("two plates, two candidates in score order") {
    GrayImage frame(640, 360, 128);
    const BBox a = composite_plate(frame, render_plate(PlateText("KA51MD4182")), 160, 90, 0.0);
    const BBox b = composite_plate(frame, render_plate(PlateText("TS09UB8902")), 450, 260, 0.0);
    DetectorConfig cfg;
    cfg.max_candidates = 2;
    const auto cands = detect_plates(frame, cfg);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].score >= cands[1].score);
    const bool a_first = iou(cands[0].box, a) >= 0.5;
    CHECK(iou(cands[a_first ? 0 : 1].box, a) >= 0.5);
    CHECK(iou(cands[a_first ? 1 : 0].box, b) >= 0.5);
}

TEST_CASE("detection is deterministic") {
    SynthRng rng(9);
    const Scene scene = make_scene(random_scene(rng, random_plate(rng), DegradeTier::harsh()));
    for (const GrayImage& f : scene.frames)
        CHECK(detect_plates(f, DetectorConfig{}) == detect_plates(f, DetectorConfig{}));
}

TEST_CASE("extend_roi") {
    CHECK(extend_roi(BBox{100, 50, 80, 30}, 1920, 1080) == BBox{80, 50, 120, 30});
    CHECK(extend_roi(BBox{10, 50, 80, 30}, 1920, 1080) == BBox{0, 50, 110, 30});
    CHECK(extend_roi(BBox{1850, 50, 70, 30}, 1920, 1080) == BBox{1830, 50, 90, 30});
    CHECK(extend_roi(BBox{0, 0, 1920, 1080}, 1920, 1080) == BBox{0, 0, 1920, 1080});
}
