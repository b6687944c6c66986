#include <doctest.h>

#include "lpr/enhancer.hpp"
#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace lpr;

TEST_CASE("enhance normalizes height") {
    const GrayImage flat = enhance(GrayImage(120, 30, 100));
    CHECK(flat.height() == kEnhancedHeight);
    CHECK(flat.width() == 256);
    CHECK(flat == GrayImage(256, 64, 100));

    GrayImage mid(200, 40, 50);
    for (int y = 10; y < 30; ++y)
        for (int x = 20; x < 180; ++x)
            mid.at(x, y) = 200;
    const GrayImage out = enhance(mid);
    const auto [lo, hi] = std::minmax_element(out.pixels().begin(), out.pixels().end());
    CHECK(*lo == 0);
    CHECK(*hi == 255);

    const GrayImage tall(80, 64, 10);
    CHECK(enhance(tall).width() == 80);
    CHECK(enhance(GrayImage(8, 40, 5)).width() == 13);
    CHECK(enhance(GrayImage(10, 200, 5)).width() == 8);
    CHECK_THROWS_AS(enhance(GrayImage(7, 10)), TooSmall);
    CHECK_THROWS_AS(enhance(GrayImage(10, 3)), TooSmall);
}

TEST_CASE("neutral degrade is the identity") {
    std::mt19937 rng(5);
    GrayImage img(31, 17);
    for (auto& p : img.pixels())
        p = static_cast<std::uint8_t>(rng());
    CHECK(degrade(img, DegradeSpec{}) == img);
    CHECK(DegradeSpec{}.neutral());
}

TEST_CASE("contrast compression") {
    GrayImage img(2, 1, {0, 255});
    DegradeSpec spec;
    spec.contrast_scale = 0.5;
    const GrayImage out = degrade(img, spec);
    CHECK(std::abs(out.at(0, 0) - 64) <= 1);
    CHECK(std::abs(out.at(1, 0) - 192) <= 1);
}

TEST_CASE("degrade is seeded and deterministic") {
    GrayImage img(40, 20, 128);
    DegradeSpec spec{6.0, GaussianBlur{0.8}, 0.85, 77};
    const GrayImage a = degrade(img, spec);
    CHECK(a == degrade(img, spec));
    CHECK_FALSE(a == img);
    spec.seed = 78;
    CHECK_FALSE(degrade(img, spec) == a);
}

TEST_CASE("noise has the requested spread") {
    DegradeSpec spec;
    spec.noise_sigma = 10.0;
    spec.seed = 1;
    const GrayImage out = degrade(GrayImage(200, 200, 128), spec);
    double sum = 0.0;
    double sq = 0.0;
    for (auto v : out.pixels()) {
        sum += v;
        sq += double(v) * v;
    }
    const double n = static_cast<double>(out.pixels().size());
    const double mean = sum / n;
    CHECK(mean == doctest::Approx(128.0).epsilon(0.01));
    CHECK(std::sqrt(sq / n - mean * mean) == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("degrade settings are validated") {
    CHECK_THROWS_AS((DegradeSpec{-1.0, NoBlur{}, 1.0, 0}.validate()), SpecInvalid);
    CHECK_THROWS_AS((DegradeSpec{0.0, NoBlur{}, 0.0, 0}.validate()), SpecInvalid);
    CHECK_THROWS_AS((DegradeSpec{0.0, NoBlur{}, 1.5, 0}.validate()), SpecInvalid);
    CHECK_THROWS_AS((DegradeSpec{0.0, GaussianBlur{0.0}, 1.0, 0}.validate()), SpecInvalid);
    CHECK_THROWS_AS((DegradeSpec{0.0, MedianBlur{4}, 1.0, 0}.validate()), SpecInvalid);
    CHECK_THROWS_AS((DegradeSpec{0.0, MedianBlur{1}, 1.0, 0}.validate()), SpecInvalid);
    CHECK_NOTHROW((DegradeSpec{14.0, MedianBlur{3}, 0.6, 0}.validate()));
}
