#pragma once

#include <optional>

#include "lsscrypt/automata.hpp"
#include "lsscrypt/chaos.hpp"
#include "lsscrypt/image.hpp"
#include "lsscrypt/permute.hpp"
#include "lsscrypt/sbox.hpp"

namespace lsscrypt {

/// Full key material: map parameters plus the mask iteration count.
/// All three must match between encrypt and decrypt.
struct MasterKey {
    ChaosParams params;
    int iterations = 30;

    MasterKey(ChaosParams p, int iters);
};

/// Per-stage sub-seeds, all sharing the master r. Derivation: one warmed-up
/// master stream emits seven states (re-drawing any exact zero), consumed in
/// the field order below; every stage stream then warms up independently.
struct KeySchedule {
    ChaosParams row_perm;
    ChaosParams col_perm;
    ChaosParams sbox1;
    ChaosParams sbox2;
    ChaosParams sbox3;
    ChaosParams selector;
    ChaosParams mask;
};

KeySchedule derive_schedule(const MasterKey& key);

/// Stage outputs captured during encryption, for debugging and the
/// stage-wise histogram analysis.
struct CipherTrace {
    GrayImage shuffled;
    GrayImage substituted;
    GrayImage mask_tile;
    GrayImage ciphertext;
};

/// shuffle -> substitute -> XOR with the tiled rule-30 mask.
/// Image dimensions must be multiples of 16.
GrayImage encrypt(const GrayImage& img, const MasterKey& key);

/// Exact inverse chain: XOR same mask -> unsubstitute -> unshuffle.
GrayImage decrypt(const GrayImage& img, const MasterKey& key);

/// Same ciphertext as encrypt; trace receives the intermediate stages.
GrayImage encrypt_traced(const GrayImage& img, const MasterKey& key, CipherTrace& trace);

/// XOR a 16x16 mask tiled over the image (self-inverse).
GrayImage xor_tiled_mask(const GrayImage& img, const MaskMatrix& mask);

} // namespace lsscrypt
