#include "lsscrypt/automata.hpp"

#include <ostream>
#include <stdexcept>

#include "lsscrypt/permute.hpp"

namespace lsscrypt {

std::vector<Cells1D> evolve_1d(const Cells1D& cells, int steps) {
    if (cells.empty()) throw std::invalid_argument("evolve_1d: empty row");
    if (steps < 0) throw std::invalid_argument("evolve_1d: steps must be >= 0");
    std::vector<Cells1D> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.push_back(cells);
    const int n = static_cast<int>(cells.size());
    Cells1D cur = cells;
    Cells1D nxt(cells.size());
    for (int t = 0; t < steps; ++t) {
        for (int i = 0; i < n; ++i) {
            int left = i > 0 ? cur[i - 1] : 0;
            int right = i < n - 1 ? cur[i + 1] : 0;
            nxt[i] = static_cast<std::uint8_t>(rule30_local(left, cur[i], right));
        }
        cur.swap(nxt);
        trajectory.push_back(cur);
    }
    return trajectory;
}

MaskMatrix seed_mask_matrix(ChaosStream& stream) {
    auto keys = stream.take(256);
    PermVector order = argsort_keys(keys);
    MaskMatrix m;
    for (int k = 0; k < 256; ++k) m.bytes[k] = static_cast<std::uint8_t>(order[k]);
    return m;
}

MaskMatrix evolve_mask(const MaskMatrix& m, int iterations) {
    if (iterations < 0) throw std::invalid_argument("evolve_mask: iterations must be >= 0");
    MaskMatrix cur = m;
    MaskMatrix nxt;
    for (int t = 0; t < iterations; ++t) {
        for (int i = 0; i < 16; ++i) {
            for (int j = 0; j < 16; ++j) {
                // XOR/OR act on all 8 bit-planes at once
                std::uint8_t above = i > 0 ? cur.at(i - 1, j) : 0;
                std::uint8_t below = i < 15 ? cur.at(i + 1, j) : 0;
                nxt.at(i, j) = static_cast<std::uint8_t>(above ^ (cur.at(i, j) | below));
            }
        }
        cur = nxt;
    }
    return cur;
}

GrayImage tile_mask(const MaskMatrix& m, int height, int width) {
    if (height < 16 || width < 16 || height % 16 != 0 || width % 16 != 0)
        throw std::invalid_argument("tile_mask: dimensions must be positive multiples of 16");
    GrayImage out(height, width);
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j)
            out.at(i, j) = m.at(i % 16, j % 16);
    return out;
}

void write_pattern_text(std::ostream& out, const std::vector<Cells1D>& trajectory) {
    for (const auto& row : trajectory) {
        for (auto c : row) out << (c ? '1' : '0');
        out << '\n';
    }
}

} // namespace lsscrypt
