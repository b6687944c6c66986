#include <doctest.h>

#include "lpr/errors.hpp"
#include "lpr/netpbm.hpp"
#include "support.hpp"

#include <cstring>
#include <random>

using namespace lpr;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header, std::vector<std::uint8_t> data) {
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

}  // namespace

TEST_CASE("minimal P5 parses") {
    const AnyImage img = read_netpbm(bytes_of("P5 2 1 255\n", {0, 255}));
    REQUIRE(std::holds_alternative<GrayImage>(img));
    CHECK(std::get<GrayImage>(img) == GrayImage(2, 1, {0, 255}));
}

TEST_CASE("header comments are skipped") {
    const AnyImage img = read_netpbm(bytes_of("P5\n# made by hand\n2 1\n# depth\n255\n", {3, 4}));
    CHECK(std::get<GrayImage>(img) == GrayImage(2, 1, {3, 4}));
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(read_netpbm(bytes_of("P3 1 1 255\n0 0 0\n", {})), BadMagic);
    CHECK_THROWS_AS(read_netpbm(bytes_of("P5 2 2 255\n", {1, 2, 3})), TruncatedData);
    CHECK_THROWS_AS(read_netpbm(bytes_of("P5 2", {})), TruncatedData);
    CHECK_THROWS_AS(read_netpbm(bytes_of("P5 1 1 65535\n", {0, 0})), UnsupportedMaxval);
    CHECK_THROWS_AS(read_netpbm(bytes_of("P5 1 1 15\n", {0})), UnsupportedMaxval);
    CHECK_THROWS_AS(read_netpbm(std::vector<std::uint8_t>{}), BadMagic);
}

TEST_CASE("canonical writer output") {
    const auto gray = write_netpbm(GrayImage(1, 1, {7}));
    CHECK(gray == bytes_of("P5\n1 1\n255\n", {7}));
    const auto rgb = write_netpbm(RgbImage(2, 2));
    const std::string header = "P6\n2 2\n255\n";
    CHECK(rgb.size() == header.size() + 12);
    CHECK(std::memcmp(rgb.data(), header.data(), header.size()) == 0);
}

TEST_CASE("round trips") {
    std::mt19937 rng(1);
    for (auto [w, h] : {std::pair{1, 1}, {3, 7}, {64, 2}}) {
        GrayImage g(w, h);
        for (auto& p : g.pixels())
            p = static_cast<std::uint8_t>(rng());
        RgbImage c(w, h);
        for (auto& p : c.pixels())
            p = static_cast<std::uint8_t>(rng());
        CHECK(std::get<GrayImage>(read_netpbm(write_netpbm(g))) == g);
        CHECK(std::get<RgbImage>(read_netpbm(write_netpbm(c))) == c);
        const auto bytes = write_netpbm(g);
        CHECK(write_netpbm(read_netpbm(bytes)) == bytes);
    }
}

TEST_CASE("file helpers") {
    TempDir dir("netpbm");
    const RgbImage red(1, 1, {255, 0, 0});
    write_netpbm_file(dir / "red.ppm", red);
    CHECK(std::get<RgbImage>(read_netpbm_file(dir / "red.ppm")) == red);
    CHECK(read_gray_file(dir / "red.ppm") == GrayImage(1, 1, {76}));
    CHECK_THROWS_AS(read_netpbm_file(dir / "missing.pgm"), IoFailure);
    CHECK_THROWS_AS(write_netpbm_file(dir / "no" / "such" / "dir.pgm", AnyImage(GrayImage(1, 1))), IoFailure);
}
