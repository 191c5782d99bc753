#include "lsscrypt/sbox.hpp"

#include <ostream>
#include <stdexcept>

#include "lsscrypt/permute.hpp"

namespace lsscrypt {

SBox SBox::identity() {
    SBox box;
    for (int v = 0; v < 256; ++v) {
        box.table[v] = static_cast<std::uint8_t>(v);
        box.inverse[v] = static_cast<std::uint8_t>(v);
    }
    return box;
}

SBox build_sbox(ChaosStream& stream) {
    auto keys = stream.take(256);
    PermVector order = argsort_keys(keys);
    SBox box;
    for (int v = 0; v < 256; ++v) box.table[v] = static_cast<std::uint8_t>(order[v]);
    for (int v = 0; v < 256; ++v) box.inverse[box.table[v]] = static_cast<std::uint8_t>(v);
    return box;
}

std::pair<int, int> split_nibbles(std::uint8_t value) {
    return {value >> 4, value & 0x0F};
}

namespace {

void check_selector(const GrayImage& img, const SelectorStream& selector) {
    if (selector.size() != img.size())
        throw std::invalid_argument("substitute: selector length must equal pixel count");
}

} // namespace

GrayImage substitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector) {
    check_selector(img, selector);
    GrayImage out(img.height, img.width);
    // Selector is materialized up front, so pixels are independent.
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < img.height; ++i) {
        for (int j = 0; j < img.width; ++j) {
            std::size_t k = static_cast<std::size_t>(i) * img.width + j;
            auto [msb, lsb] = split_nibbles(img.pixels[k]);
            out.pixels[k] = triple.boxes[selector[k]].table[msb * 16 + lsb];
        }
    }
    return out;
}

GrayImage unsubstitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector) {
    check_selector(img, selector);
    GrayImage out(img.height, img.width);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < img.height; ++i) {
        for (int j = 0; j < img.width; ++j) {
            std::size_t k = static_cast<std::size_t>(i) * img.width + j;
            out.pixels[k] = triple.boxes[selector[k]].inverse[img.pixels[k]];
        }
    }
    return out;
}

void dump_sbox(std::ostream& out, const SBox& box) {
    static const char* hex = "0123456789abcdef";
    for (int row = 0; row < 16; ++row) {
        for (int col = 0; col < 16; ++col) {
            std::uint8_t v = box.table[row * 16 + col];
            out << hex[v >> 4] << hex[v & 0x0F] << (col == 15 ? '\n' : ' ');
        }
    }
}

} // namespace lsscrypt
