#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lsscrypt/chaos.hpp"
#include "lsscrypt/image.hpp"

namespace lsscrypt {

/// Rule 30: left XOR (center OR right).
inline int rule30_local(int left, int center, int right) {
    return left ^ (center | right);
}

using Cells1D = std::vector<std::uint8_t>; // values 0/1

/// Synchronous evolution with fixed zero boundary; returns the whole
/// trajectory, initial row first (steps+1 rows).
std::vector<Cells1D> evolve_1d(const Cells1D& cells, int steps);

/// 16x16 byte matrix tiled over the image as the XOR mask.
struct MaskMatrix {
    std::array<std::uint8_t, 256> bytes{};

    std::uint8_t& at(int i, int j) { return bytes[static_cast<std::size_t>(i) * 16 + j]; }
    std::uint8_t at(int i, int j) const { return bytes[static_cast<std::size_t>(i) * 16 + j]; }

    bool operator==(const MaskMatrix&) const = default;
};

/// 256 draws argsorted into a rank permutation of 0..255, reshaped row-major.
MaskMatrix seed_mask_matrix(ChaosStream& stream);

/// Rule 30 applied bytewise down each column: above XOR (self OR below),
/// rows out of range read as 0. Synchronous (double-buffered); every row
/// updates each iteration. Columns are independent, so this could run
/// column-parallel without changing results; at 16x16 it is not worth it.
MaskMatrix evolve_mask(const MaskMatrix& m, int iterations);

/// out[i][j] = m[i mod 16][j mod 16]; H and W must be multiples of 16.
GrayImage tile_mask(const MaskMatrix& m, int height, int width);

/// Trajectory as text rows of 0/1 characters.
void write_pattern_text(std::ostream& out, const std::vector<Cells1D>& trajectory);

} // namespace lsscrypt
