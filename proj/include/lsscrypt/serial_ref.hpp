#pragma once

#include "lsscrypt/analysis.hpp"
#include "lsscrypt/automata.hpp"
#include "lsscrypt/image.hpp"
#include "lsscrypt/permute.hpp"
#include "lsscrypt/sbox.hpp"

// Single-threaded reference versions of the parallel kernels. Tests assert
// bit-exact agreement with the OpenMP paths; the kernel benchmark compares
// throughput. Keep these plain and obviously-correct.
namespace lsscrypt::serial {

GrayImage shuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols);
GrayImage unshuffle_image(const GrayImage& img, const PermVector& rows, const PermVector& cols);
GrayImage substitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector);
GrayImage unsubstitute_image(const GrayImage& img, const SBoxTriple& triple, const SelectorStream& selector);
GrayImage xor_tiled_mask(const GrayImage& img, const MaskMatrix& mask);

Histogram256 histogram(const GrayImage& img);
GlcmMatrix glcm(const GrayImage& img);
CorrResult adjacent_correlation(const GrayImage& img, Direction dir);
CorrResult cross_correlation(const GrayImage& a, const GrayImage& b, Direction dir);

} // namespace lsscrypt::serial
