#include <doctest.h>

#include "lpr/errors.hpp"
#include "lpr/selector.hpp"

using namespace lpr;

namespace {

// Detector stub: reports a fixed box on frames whose first pixel is set.
struct MarkerDetector {
    BBox box;
    int* calls;
    std::vector<PlateCandidate> operator()(const GrayImage& f) const {
        ++*calls;
        if (f.at(0, 0) == 0)
            return {};
        return {PlateCandidate{box, 0.5}};
    }
};

std::vector<GrayImage> frames_with_presence(int n, int first, int last) {
    std::vector<GrayImage> frames;
    for (int i = 0; i < n; ++i)
        frames.emplace_back(4, 4, static_cast<std::uint8_t>(i >= first && i < last ? 1 : 0));
    return frames;
}

}  // namespace

TEST_CASE("stride") {
    CHECK(stride_for(25) == 12);
    CHECK(stride_for(30) == 15);
    CHECK(stride_for(2) == 1);
    CHECK_THROWS_AS(stride_for(1), BadFps);
    CHECK_THROWS_AS(stride_for(0), BadFps);
}

TEST_CASE("stationarity") {
    CHECK(is_stationary(BBox{5, 5, 10, 10}, BBox{5, 5, 10, 10}, 0.7));
    CHECK_FALSE(is_stationary(BBox{0, 0, 10, 10}, BBox{50, 50, 10, 10}, 0.7));
    CHECK_FALSE(is_stationary(BBox{0, 0, 100, 100}, BBox{50, 0, 100, 100}, 0.7));
}

TEST_CASE("uniform video visits every stride-th frame and emits nothing") {
    int calls = 0;
    const auto frames = frames_with_presence(100, 0, 0);
    const auto sel = select_frames(frames, 25, MarkerDetector{{}, &calls});
    CHECK(sel.empty());
    CHECK(calls == 9);
}

TEST_CASE("static plate is reported once") {
    int calls = 0;
    const auto frames = frames_with_presence(250, 0, 250);
    const auto sel = select_frames(frames, 25, MarkerDetector{BBox{1, 1, 2, 1}, &calls});
    REQUIRE(sel.size() == 1);
    CHECK(sel[0].frame_index == 0);
    CHECK_FALSE(sel[0].candidates.empty());
}

TEST_CASE("short presence is caught at its single sample") {
    int calls = 0;
    const auto frames = frames_with_presence(200, 100, 113);
    const auto sel = select_frames(frames, 25, MarkerDetector{BBox{0, 0, 2, 1}, &calls});
    REQUIRE(sel.size() == 1);
    CHECK(sel[0].frame_index == 108);
    CHECK(sel[0].timestamp_s == doctest::Approx(108.0 / 25.0));
}

TEST_CASE("moving plate is reported at each displacement") {
    FrameCursor cursor(25);
    CHECK(cursor.observe({PlateCandidate{BBox{0, 0, 100, 20}, 0.4}}).has_value());
    CHECK_FALSE(cursor.observe({PlateCandidate{BBox{5, 0, 100, 20}, 0.4}}).has_value());
    CHECK(cursor.observe({PlateCandidate{BBox{60, 0, 100, 20}, 0.4}}).has_value());
    CHECK(cursor.frame_index() == 36);
}

TEST_CASE("prev_loc follows the best candidate and resets on empty frames") {
    FrameCursor cursor(10);
    cursor.observe({PlateCandidate{BBox{0, 0, 10, 10}, 0.2}, PlateCandidate{BBox{50, 50, 10, 10}, 0.9}});
    CHECK(cursor.prev_loc() == BBox{50, 50, 10, 10});
    cursor.skip();
    CHECK(cursor.prev_loc().has_value());
    CHECK(cursor.frame_index() == 10);
    cursor.observe({});
    CHECK_FALSE(cursor.prev_loc().has_value());
    CHECK(cursor.observe({PlateCandidate{BBox{50, 50, 10, 10}, 0.9}}).has_value());
}

TEST_CASE("unreadable frames are skipped without stopping selection") {
    int calls = 0;
    MarkerDetector detect{BBox{0, 0, 2, 1}, &calls};
    const auto sel = select_frames(
        60, 25,
        [](int i) -> std::optional<GrayImage> {
            if (i == 12)
                return std::nullopt;
            return GrayImage(4, 4, 1);
        },
        detect);
    CHECK(calls == 4);
    REQUIRE(sel.size() == 1);
    CHECK(sel[0].frame_index == 0);
}

TEST_CASE("cursor validates its arguments") {
    CHECK_THROWS_AS(FrameCursor(1), BadFps);
    CHECK_THROWS_AS(FrameCursor(25, 0.0), Error);
    CHECK_THROWS_AS(FrameCursor(25, 1.5), Error);
    CHECK_THROWS_AS(select_frames(std::span<const GrayImage>{}, 25, [](const GrayImage&) {
        return std::vector<PlateCandidate>{};
    }), Error);
}
