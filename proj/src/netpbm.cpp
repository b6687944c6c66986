#include "lpr/netpbm.hpp"

#include "lpr/errors.hpp"
#include "lpr/imaging.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

namespace lpr {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    long read_number() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size())
            throw TruncatedData("netpbm header ends early");
        if (!std::isdigit(bytes_[pos_]))
            throw TruncatedData("netpbm header field is not a number");
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 1'000'000)
                throw TruncatedData("netpbm header field too large");
            ++pos_;
        }
        return v;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void expect_single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw TruncatedData("netpbm header missing raster separator");
        ++pos_;
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> encode(const char* magic, int w, int h, std::span<const std::uint8_t> data) {
    const std::string header = std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + data.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

}  // namespace

AnyImage read_netpbm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw BadMagic("expected binary netpbm magic P5 or P6");
    const bool color = bytes[1] == '6';

    HeaderReader reader(bytes);
    reader.advance(2);
    const long w = reader.read_number();
    const long h = reader.read_number();
    const long maxval = reader.read_number();
    if (maxval != 255)
        throw UnsupportedMaxval("only maxval 255 is supported, got " + std::to_string(maxval));
    if (w < 1 || h < 1)
        throw TruncatedData("netpbm dimensions must be positive");
    reader.expect_single_space();

    const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * (color ? 3 : 1);
    if (bytes.size() - reader.pos() < need)
        throw TruncatedData("netpbm raster shorter than " + std::to_string(need) + " bytes");

    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(reader.pos());
    std::vector<std::uint8_t> data(first, first + static_cast<std::ptrdiff_t>(need));
    if (color)
        return RgbImage(static_cast<int>(w), static_cast<int>(h), std::move(data));
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(data));
}

std::vector<std::uint8_t> write_netpbm(const GrayImage& img) {
    return encode("P5", img.width(), img.height(), img.pixels());
}

std::vector<std::uint8_t> write_netpbm(const RgbImage& img) {
    return encode("P6", img.width(), img.height(), img.pixels());
}

std::vector<std::uint8_t> write_netpbm(const AnyImage& img) {
    return std::visit([](const auto& i) { return write_netpbm(i); }, img);
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoFailure("read failed for " + path.string());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoFailure("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoFailure("write failed for " + path.string());
}

AnyImage read_netpbm_file(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return read_netpbm(bytes);
}

GrayImage read_gray_file(const std::filesystem::path& path) {
    AnyImage img = read_netpbm_file(path);
    if (auto* rgb = std::get_if<RgbImage>(&img))
        return to_gray(*rgb);
    return std::get<GrayImage>(std::move(img));
}

void write_netpbm_file(const std::filesystem::path& path, const AnyImage& img) {
    write_file_bytes(path, write_netpbm(img));
}

}  // namespace lpr
