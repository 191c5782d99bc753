#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lsscrypt/chaos.hpp"
#include "lsscrypt/image.hpp"

namespace lsscrypt {

/// Bijective byte substitution table, viewed as a 16x16 grid indexed by
/// (high nibble, low nibble).
struct SBox {
    std::array<std::uint8_t, 256> table;
    std::array<std::uint8_t, 256> inverse;

    static SBox identity();
};

struct SBoxTriple {
    std::array<SBox, 3> boxes;
};

/// Key-dependent box: 256 draws, argsorted; the rank ordering is the table.
SBox build_sbox(ChaosStream& stream);

/// (value div 16, value mod 16)
std::pair<int, int> split_nibbles(std::uint8_t value);

// Per-pixel selector values in {0,1,2}, row-major, one per pixel.
using SelectorStream = std::vector<std::uint8_t>;

/// out[i][j] = boxes[selector[k]].table[msb*16 + lsb], k advancing row-major.
GrayImage substitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector);

/// Inverse lookup with the same selector.
GrayImage unsubstitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector);

/// 16x16 hex grid, for cross-implementation diffing.
void dump_sbox(std::ostream& out, const SBox& box);

} // namespace lsscrypt
