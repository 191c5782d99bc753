#include "lsscrypt/permute.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lsscrypt {

PermVector argsort_keys(std::span<const double> keys) {
    if (keys.empty()) throw std::invalid_argument("argsort_keys: empty input");
    PermVector idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    return idx;
}

bool is_permutation(const PermVector& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (auto v : perm) {
        if (v >= perm.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

PermVector invert_permutation(const PermVector& perm) {
    PermVector inv(perm.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

namespace {

void check_dims(const GrayImage& img, const PermVector& rows, const PermVector& cols) {
    if (rows.size() != static_cast<std::size_t>(img.height) ||
        cols.size() != static_cast<std::size_t>(img.width))
        throw std::invalid_argument("shuffle: permutation lengths must match image dimensions");
}

} // namespace

GrayImage shuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols) {
    check_dims(img, rows, cols);
    GrayImage out(img.height, img.width);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < img.height; ++i) {
        const std::uint8_t* src = &img.pixels[static_cast<std::size_t>(rows[i]) * img.width];
        std::uint8_t* dst = &out.pixels[static_cast<std::size_t>(i) * img.width];
        for (int j = 0; j < img.width; ++j) dst[j] = src[cols[j]];
    }
    return out;
}

GrayImage unshuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols) {
    check_dims(img, rows, cols);
    PermVector inv_rows = invert_permutation(rows);
    PermVector inv_cols = invert_permutation(cols);
    GrayImage out(img.height, img.width);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < img.height; ++i) {
        const std::uint8_t* src = &img.pixels[static_cast<std::size_t>(inv_rows[i]) * img.width];
        std::uint8_t* dst = &out.pixels[static_cast<std::size_t>(i) * img.width];
        for (int j = 0; j < img.width; ++j) dst[j] = src[inv_cols[j]];
    }
    return out;
}

ShuffleResult chaotic_shuffle(const GrayImage& img, ChaosStream& row_stream, ChaosStream& col_stream) {
    auto row_keys = row_stream.take(static_cast<std::size_t>(img.height));
    auto col_keys = col_stream.take(static_cast<std::size_t>(img.width));
    PermVector rows = argsort_keys(row_keys);
    PermVector cols = argsort_keys(col_keys);
    GrayImage shuffled = shuffle_image(img, rows, cols);
    return {std::move(shuffled), std::move(rows), std::move(cols)};
}

} // namespace lsscrypt
