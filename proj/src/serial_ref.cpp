#include "lsscrypt/serial_ref.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lsscrypt::serial {

namespace {

void offset_of(Direction dir, int& di, int& dj) {
    switch (dir) {
        case Direction::vertical: di = 1; dj = 0; break;
        case Direction::horizontal: di = 0; dj = 1; break;
        case Direction::diagonal: di = 1; dj = 1; break;
    }
}

} // namespace

GrayImage shuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols) {
    if (rows.size() != static_cast<std::size_t>(img.height) ||
        cols.size() != static_cast<std::size_t>(img.width))
        throw std::invalid_argument("shuffle: permutation lengths must match image dimensions");
    GrayImage out(img.height, img.width);
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j)
            out.at(i, j) = img.at(static_cast<int>(rows[i]), static_cast<int>(cols[j]));
    return out;
}

GrayImage unshuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols) {
    if (rows.size() != static_cast<std::size_t>(img.height) ||
        cols.size() != static_cast<std::size_t>(img.width))
        throw std::invalid_argument("unshuffle: permutation lengths must match image dimensions");
    GrayImage out(img.height, img.width);
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j)
            out.at(static_cast<int>(rows[i]), static_cast<int>(cols[j])) = img.at(i, j);
    return out;
}

GrayImage substitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector) {
    if (selector.size() != img.size())
        throw std::invalid_argument("substitute: selector length must equal pixel count");
    GrayImage out(img.height, img.width);
    std::size_t k = 0;
    for (int i = 0; i < img.height; ++i) {
        for (int j = 0; j < img.width; ++j, ++k) {
            auto [msb, lsb] = split_nibbles(img.at(i, j));
            out.at(i, j) = triple.boxes[selector[k]].table[msb * 16 + lsb];
        }
    }
    return out;
}

GrayImage unsubstitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector) {
    if (selector.size() != img.size())
        throw std::invalid_argument("unsubstitute: selector length must equal pixel count");
    GrayImage out(img.height, img.width);
    std::size_t k = 0;
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j, ++k)
            out.at(i, j) = triple.boxes[selector[k]].inverse[img.at(i, j)];
    return out;
}

GrayImage xor_tiled_mask(const GrayImage& img, const MaskMatrix& mask) {
    if (!tileable16(img))
        throw std::invalid_argument("xor_tiled_mask: image dimensions must be multiples of 16");
    GrayImage out(img.height, img.width);
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j)
            out.at(i, j) = img.at(i, j) ^ mask.at(i % 16, j % 16);
    return out;
}

Histogram256 histogram(const GrayImage& img) {
    Histogram256 h;
    for (auto v : img.pixels) ++h.counts[v];
    return h;
}

GlcmMatrix glcm(const GrayImage& img) {
    if (img.width < 2) throw std::invalid_argument("glcm: width must be >= 2");
    std::array<std::uint64_t, 64> counts{};
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j + 1 < img.width; ++j)
            ++counts[(img.at(i, j) >> 5) * 8 + (img.at(i, j + 1) >> 5)];
    GlcmMatrix g;
    const double total = static_cast<double>(img.height) * (img.width - 1);
    for (int k = 0; k < 64; ++k) g.probs[k] = static_cast<double>(counts[k]) / total;
    return g;
}

namespace {

CorrResult pearson_pairs(const GrayImage& a, const GrayImage& b, Direction dir) {
    int di, dj;
    offset_of(dir, di, dj);
    if (a.height <= di || a.width <= dj)
        throw std::invalid_argument("correlation: image too small for this direction");
    std::int64_t n = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i + di < a.height; ++i) {
        for (int j = 0; j + dj < a.width; ++j) {
            std::int64_t x = a.at(i, j);
            std::int64_t y = b.at(i + di, j + dj);
            ++n;
            sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
        }
    }
    CorrResult res;
    res.pairs = static_cast<std::size_t>(n);
    double var_x = static_cast<double>(n * sxx - sx * sx);
    double var_y = static_cast<double>(n * syy - sy * sy);
    if (var_x <= 0.0 || var_y <= 0.0) {
        res.degenerate = true;
        res.value = 0.0;
        return res;
    }
    res.value = static_cast<double>(n * sxy - sx * sy) / std::sqrt(var_x * var_y);
    return res;
}

} // namespace

CorrResult adjacent_correlation(const GrayImage& img, Direction dir) {
    return pearson_pairs(img, img, dir);
}

CorrResult cross_correlation(const GrayImage& a, const GrayImage& b, Direction dir) {
    if (a.height != b.height || a.width != b.width)
        throw std::invalid_argument("cross_correlation: dimension mismatch");
    return pearson_pairs(a, b, dir);
}

} // namespace lsscrypt::serial
