#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsscrypt/chaos.hpp"
#include "lsscrypt/image.hpp"

namespace lsscrypt {

using PermVector = std::vector<std::uint32_t>;

/// Indices that order keys ascending; ties keep original order.
PermVector argsort_keys(std::span<const double> keys);

bool is_permutation(const PermVector& perm);
PermVector invert_permutation(const PermVector& perm);

/// out[i][j] = img[rows[i]][cols[j]]
GrayImage shuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols);

/// Exact inverse: unshuffle(shuffle(x, rp, cp), rp, cp) == x.
GrayImage unshuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols);

struct ShuffleResult {
    GrayImage image;
    PermVector rows;
    PermVector cols;
};

/// Draws H reals from row_stream and W from col_stream, argsorts each and
/// applies the permutations.
ShuffleResult chaotic_shuffle(const GrayImage& img, ChaosStream& row_stream, ChaosStream& col_stream);

} // namespace lsscrypt
