#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lsscrypt {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int h, int w, std::uint8_t fill = 0)
        : height(h), width(w), pixels(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {
        if (h < 1 || w < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    }

    std::uint8_t& at(int i, int j) { return pixels[static_cast<std::size_t>(i) * width + j]; }
    std::uint8_t at(int i, int j) const { return pixels[static_cast<std::size_t>(i) * width + j]; }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

// The mask tiling works on 16x16 blocks; the cipher only accepts such sizes.
inline bool tileable16(const GrayImage& img) {
    return img.height % 16 == 0 && img.width % 16 == 0;
}

} // namespace lsscrypt
